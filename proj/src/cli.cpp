#include "gk/cli.hpp"

#include <sstream>

#include "gk/error.hpp"
#include "gk/mvquiver.hpp"
#include "gk/strings.hpp"
#include "gk/tableaux.hpp"
#include "json.hpp"

namespace gk::cli {

using nlohmann::ordered_json;

int effective_depth(const RunConfig& cfg) {
  if (cfg.depth) return *cfg.depth;
  return cfg.command == Command::verify ? 6 : 4;
}

Format effective_format(const RunConfig& cfg) {
  if (cfg.format) return *cfg.format;
  return cfg.command == Command::graph ? Format::dot : Format::tsv;
}

void validate(const RunConfig& cfg) {
  if (cfg.rank) {
    if (*cfg.rank < 1) throw UsageError("--rank must be at least 1");
    if (*cfg.rank > cfg.max_rank)
      throw UsageError("--rank " + std::to_string(*cfg.rank) + " exceeds the safety limit " +
                       std::to_string(cfg.max_rank) + " (raise --max-rank)");
  }
  if (effective_depth(cfg) < 0) throw UsageError("--depth must be nonnegative");
  const Format format = effective_format(cfg);
  if (cfg.command == Command::graph && format != Format::dot)
    throw UsageError("graph only supports --format dot");
  if (cfg.command != Command::graph && format == Format::dot)
    throw UsageError("--format dot is only valid for graph");
  if (cfg.coefficients && cfg.command != Command::graph)
    throw UsageError("--coefficients only applies to graph");
  const bool takes_input = cfg.command == Command::param || cfg.command == Command::convert;
  if (takes_input && cfg.input.empty()) throw UsageError("missing input element");
  if (!takes_input && !cfg.input.empty()) throw UsageError("unexpected positional argument");
}

namespace {

Rank table_rank(const RunConfig& cfg) { return Rank(cfg.rank.value_or(2)); }

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string tsv_line(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += '\t';
    out += f;
  }
  return out + '\n';
}

std::string coefficient_label(int exponent) {
  if (exponent == 0) return "1";
  if (exponent == 1) return "1-t^-1";
  return "(1-t^-1)^" + std::to_string(exponent);
}

}  // namespace

CommandResult cmd_enumerate(const RunConfig& cfg) {
  const Rank rank = table_rank(cfg);
  const auto elements = enumerate_crystal(rank, effective_depth(cfg), cfg.strategy);
  CommandResult result;
  if (effective_format(cfg) == Format::json) {
    ordered_json doc = ordered_json::array();
    for (const MLTableau& b : elements) {
      const StringParam psi = bzl_path(b);
      const LusztigDatum phi = to_lusztig(psi);
      doc.push_back({{"tableau", format_tableau(b)},
                     {"weight", weight_neg(b).coeffs()},
                     {"seg", seg(b)},
                     {"psi", format_string_param(psi)},
                     {"phi", format_lusztig(phi)},
                     {"nc", nc(psi)},
                     {"nz", nz(phi)}});
    }
    result.out = doc.dump(2) + "\n";
    return result;
  }
  result.out = tsv_line({"tableau", "weight", "seg", "psi", "phi", "nc", "nz"});
  for (const MLTableau& b : elements) {
    const StringParam psi = bzl_path(b);
    const LusztigDatum phi = to_lusztig(psi);
    result.out += tsv_line({format_tableau(b), join_ints(weight_neg(b).coeffs()), std::to_string(seg(b)),
                            format_string_param(psi), format_lusztig(phi), std::to_string(nc(psi)),
                            std::to_string(nz(phi))});
  }
  return result;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const Rank rank = table_rank(cfg);
  const int cap = effective_depth(cfg);
  const TruncatedSeries lhs = product_side(rank, cap);
  const TruncatedSeries rhs = sum_side(rank, cap, cfg.strategy);
  const CompareReport report = compare(lhs, rhs);

  int kostant_failures = 0;
  for (const auto& [exponent, value] : rhs.evaluate(0))
    if (value != kostant(rank, exponent)) ++kostant_failures;
  const auto at_one = rhs.evaluate(1);
  const bool u1_ok = at_one.size() == 1 && height(at_one.begin()->first) == 0 && at_one.begin()->second == 1;

  CommandResult result;
  result.exit_code = report.match() ? exit_code::ok : exit_code::mismatch;
  if (effective_format(cfg) == Format::json) {
    ordered_json doc;
    doc["rank"] = rank.value();
    doc["cap"] = cap;
    doc["terms"] = lhs.terms().size();
    doc["result"] = report.match() ? "MATCH" : "MISMATCH";
    doc["kostant"] = kostant_failures == 0 ? "MATCH" : "MISMATCH";
    doc["u_equals_one"] = u1_ok ? "MATCH" : "MISMATCH";
    doc["mismatches"] = ordered_json::array();
    for (const Mismatch& m : report.mismatches)
      doc["mismatches"].push_back(
          {{"exponent", m.exponent.coeffs()}, {"product", to_string(m.lhs)}, {"sum", to_string(m.rhs)}});
    result.out = doc.dump(2) + "\n";
    return result;
  }
  std::ostringstream out;
  out << "rank\t" << rank.value() << "\n"
      << "cap\t" << cap << "\n"
      << "terms\t" << lhs.terms().size() << "\n";
  for (const Mismatch& m : report.mismatches)
    out << "mismatch\t" << join_ints(m.exponent.coeffs()) << "\t" << to_string(m.lhs) << "\t"
        << to_string(m.rhs) << "\n";
  out << "kostant\t" << (kostant_failures == 0 ? "MATCH" : "MISMATCH") << "\n"
      << "u=1\t" << (u1_ok ? "MATCH" : "MISMATCH") << "\n"
      << "result\t" << (report.match() ? "MATCH" : "MISMATCH") << "\n";
  result.out = out.str();
  return result;
}

CommandResult cmd_graph(const RunConfig& cfg) {
  const Rank rank = table_rank(cfg);
  const int depth = effective_depth(cfg);
  const auto elements = enumerate_crystal(rank, depth, cfg.strategy);
  std::map<MLTableau, std::size_t> id;
  for (std::size_t n = 0; n < elements.size(); ++n) id.emplace(elements[n], n);

  std::ostringstream out;
  out << "digraph T_infinity {\n"
      << "  node [shape=box];\n";
  for (std::size_t n = 0; n < elements.size(); ++n) {
    const MLTableau& b = elements[n];
    out << "  b" << n << " [label=\"" << format_tableau(b);
    if (cfg.coefficients) out << "\\n" << coefficient_label(seg(b)) << "\", seg=\"" << seg(b);
    out << "\", depth=\"" << height(weight_neg(b)) << "\"];\n";
  }
  for (std::size_t n = 0; n < elements.size(); ++n) {
    const MLTableau& b = elements[n];
    if (height(weight_neg(b)) >= depth) continue;
    for (int i = 1; i <= rank.value(); ++i)
      out << "  b" << n << " -> b" << id.at(f(b, i)) << " [label=\"" << i << "\"];\n";
  }
  out << "}\n";
  return {exit_code::ok, out.str(), {}};
}

namespace {

CommandResult element_record(const MLTableau& b, Format format) {
  const LongWord word = default_long_word(b.rank());
  const StringParam psi = bzl_path(b, word);
  const LusztigDatum phi = to_lusztig(psi);
  const MVPathDatum path = lusztig_to_path(phi, word);
  const QuiverDecomposition quiver = lusztig_to_quiver(phi, word);

  std::string vertices;
  for (const auto& v : path.vertices) vertices += (vertices.empty() ? "" : " ") + format_vertex(v);

  CommandResult result;
  if (format == Format::json) {
    ordered_json doc;
    doc["rank"] = b.r();
    doc["tableau"] = format_tableau(b);
    doc["full"] = format_tableau(b, TableauMode::full);
    doc["weight"] = weight_neg(b).coeffs();
    doc["seg"] = seg(b);
    doc["psi"] = format_string_param(psi);
    doc["nc"] = nc(psi);
    doc["phi"] = format_lusztig(phi);
    doc["nz"] = nz(phi);
    ordered_json verts = ordered_json::array();
    for (const auto& v : path.vertices) verts.push_back(v.coeffs());
    doc["mv_vertices"] = std::move(verts);
    doc["mv_edges"] = path.num_edges();
    doc["quiver"] = format_decomposition(quiver);
    doc["gamma"] = gamma(quiver);
    doc["dim"] = dim_vector(quiver).coeffs();
    result.out = doc.dump(2) + "\n";
    return result;
  }
  result.out = tsv_line({"rank", std::to_string(b.r())}) + tsv_line({"tableau", format_tableau(b)}) +
               tsv_line({"full", format_tableau(b, TableauMode::full)}) +
               tsv_line({"weight", join_ints(weight_neg(b).coeffs())}) +
               tsv_line({"seg", std::to_string(seg(b))}) + tsv_line({"psi", format_string_param(psi)}) +
               tsv_line({"nc", std::to_string(nc(psi))}) + tsv_line({"phi", format_lusztig(phi)}) +
               tsv_line({"nz", std::to_string(nz(phi))}) + tsv_line({"mv_vertices", vertices}) +
               tsv_line({"mv_edges", std::to_string(path.num_edges())}) +
               tsv_line({"quiver", format_decomposition(quiver)}) +
               tsv_line({"gamma", std::to_string(gamma(quiver))}) +
               tsv_line({"dim", join_ints(dim_vector(quiver).coeffs())});
  return result;
}

void check_rank(const RunConfig& cfg, Rank parsed) {
  if (cfg.rank && *cfg.rank != parsed.value())
    throw UsageError("input has rank " + std::to_string(parsed.value()) + " but --rank is " +
                     std::to_string(*cfg.rank));
  if (parsed.value() > cfg.max_rank) throw UsageError("input rank exceeds the safety limit");
}

}  // namespace

CommandResult cmd_param(const RunConfig& cfg) {
  const MLTableau b = parse_tableau(cfg.input);
  check_rank(cfg, b.rank());
  return element_record(b, effective_format(cfg));
}

CommandResult cmd_convert(const RunConfig& cfg) {
  LusztigDatum phi = cfg.from == DatumKind::lusztig ? parse_lusztig(cfg.input)
                                                    : to_lusztig(parse_string_param(cfg.input));
  check_rank(cfg, phi.rank());
  return element_record(lusztig_to_tableau(phi), effective_format(cfg));
}

CommandResult run(const RunConfig& cfg) {
  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::enumerate: return cmd_enumerate(cfg);
      case Command::verify: return cmd_verify(cfg);
      case Command::graph: return cmd_graph(cfg);
      case Command::param: return cmd_param(cfg);
      case Command::convert: return cmd_convert(cfg);
    }
    throw UsageError("unknown command");
  } catch (const UsageError& ex) {
    return {exit_code::usage, {}, std::string("error: ") + ex.what() + "\n"};
  } catch (const ParseError& ex) {
    return {exit_code::parse, {}, std::string("parse error: ") + ex.what() + "\n"};
  } catch (const ConeViolation& ex) {
    return {exit_code::parse, {}, std::string("error: ") + ex.what() + "\n"};
  } catch (const std::invalid_argument& ex) {
    return {exit_code::parse, {}, std::string("error: ") + ex.what() + "\n"};
  }
}

}  // namespace gk::cli
