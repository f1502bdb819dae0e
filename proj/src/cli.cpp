#include "jonq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "jonq/errors.hpp"
#include "jonq/expr.hpp"
#include "jonq/invariant_fields.hpp"
#include "jonq/jonq_group.hpp"
#include "jonq/map_document.hpp"
#include "jonq/torus_weights.hpp"
#include "jonq/unipotent_slice.hpp"

namespace jonq::cli {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JonqElement load_element(const std::string& path) {
  LoadedMap m = load_map(parse_map_document(read_file(path)));
  if (auto* g = std::get_if<JonqElement>(&m)) return std::move(*g);
  throw ValidationError(path + ": expected a J or Jhat element, found a flow");
}

std::vector<JonqElement> load_elements(const std::vector<std::string>& paths) {
  std::vector<JonqElement> gens;
  for (const auto& p : paths) gens.push_back(load_element(p));
  return gens;
}

ordered_json document_json(const MapDocument& doc) { return ordered_json::parse(serialize(doc)); }

void print_element(std::ostream& out, const JonqElement& g) {
  out << "variant: " << to_string(g.variant()) << "\n";
  for (std::size_t i = 1; i <= g.dimension(); ++i) out << "x" << i << " -> " << render(g.image(i)) << "\n";
}

void print_flow(std::ostream& out, const AdditiveFlow& f) {
  bool any = false;
  for (std::size_t i = 1; i <= f.n; ++i) {
    if (f.F[i - 1].is_zero()) continue;
    out << (any ? ", " : "") << "x" << i << " -> "
        << render(RatFunc::variable(Var::x(static_cast<std::uint32_t>(i))) + f.F[i - 1]);
    any = true;
  }
  out << (any ? "" : "trivial") << "\n";
}

ordered_json string_list(const std::vector<RatFunc>& fs) {
  ordered_json a = ordered_json::array();
  for (const auto& f : fs) a.push_back(render(f));
  return a;
}

std::string join(const std::vector<RatFunc>& fs) {
  std::string s;
  for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? ", " : "") + render(fs[k]);
  return s;
}

IntMatrix parse_weights(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Integer> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
      Integer v;
      if (cell.empty() || v.set_str(cell, 10) != 0) throw ValidationError("bad weight entry \"" + cell + "\"");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().empty()) throw ValidationError("empty weight matrix");
  IntMatrix w(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != w.cols()) throw ValidationError("weight rows differ in length");
    for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = rows[i][j];
  }
  return w;
}

std::vector<Rational> parse_constants(const std::string& text) {
  std::vector<Rational> cs;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const RatFunc r = parse(cell);
    if (!r.is_constant()) throw ValidationError("slice constant \"" + cell + "\" is not a rational number");
    cs.push_back(r.constant_value());
  }
  if (cs.empty()) throw ValidationError("no slice constants given");
  return cs;
}

int report_slice(std::ostream& out, bool as_json, const std::vector<AdditiveFlow>& flows,
                 const std::vector<Rational>& candidates) {
  const SliceResult r = slice_chain(flows, candidates);
  const bool verified = verify_cross_section(flows, r);
  if (as_json) {
    ordered_json j;
    j["indices"] = r.indices;
    ordered_json cs = ordered_json::array();
    for (const auto& c : r.constants) cs.push_back(to_string(c));
    j["constants"] = cs;
    j["invariants"] = string_list(r.invariants);
    j["subspace"] = describe_subspace(r);
    j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else {
    out << "subspace: " << describe_subspace(r) << "\n";
    out << "invariants: " << (r.invariants.empty() ? "none" : join(r.invariants)) << "\n";
    out << "verified: " << (verified ? "true" : "false") << "\n";
  }
  return verified ? kSuccess : kUnresolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational de Jonquieres maps: composition, orders, invariant fields and cross-sections", "jonq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string a_path, b_path, expr, weights, constants, algebra_path;
  std::vector<std::string> paths;
  std::uint64_t cap = 1000;
  unsigned deg = AnsatzBounds{}.max_degree_in_t, coeff_deg = AnsatzBounds{}.max_coeff_degree;
  long d1 = 0, d2 = 0;

  auto* compose_cmd = app.add_subcommand("compose", "Product A*B (apply B first, then A)");
  compose_cmd->add_option("A", a_path)->required();
  compose_cmd->add_option("B", b_path)->required();
  auto* invert_cmd = app.add_subcommand("invert", "Inverse element");
  invert_cmd->add_option("A", a_path)->required();
  auto* order_cmd = app.add_subcommand("order", "Order of an element");
  order_cmd->add_option("A", a_path)->required();
  order_cmd->add_option("--cap", cap, "Search cap for Jhat elements")->capture_default_str();
  auto* apply_cmd = app.add_subcommand("apply", "Apply an element to a rational function");
  apply_cmd->add_option("A", a_path)->required();
  apply_cmd->add_option("--expr", expr)->required();
  auto* inv_cmd = app.add_subcommand("invariants", "Invariant-field generators along the flag");
  inv_cmd->add_option("G", paths)->required();
  inv_cmd->add_option("--deg", deg, "Largest degree in x_i")->capture_default_str()->check(CLI::PositiveNumber);
  inv_cmd->add_option("--coeff-deg", coeff_deg, "Coefficient degree bound")->capture_default_str()->check(CLI::PositiveNumber);
  auto* closure_cmd = app.add_subcommand("closure", "Enumerate the generated subgroup");
  closure_cmd->add_option("G", paths)->required();
  closure_cmd->add_option("--cap", cap, "Give up beyond this many elements")->capture_default_str();
  auto* torus_cmd = app.add_subcommand("torus-invariants", "Monomial invariants of a diagonal torus");
  torus_cmd->add_option("--weights", weights, "Rows separated by ';', entries by ','")->required();
  auto* slice_cmd = app.add_subcommand("slice", "Rational cross-section for additive flows");
  slice_cmd->add_option("flows", a_path)->required();
  slice_cmd->add_option("--constants", constants, "Candidate constants, comma separated");
  auto* coadj_cmd = app.add_subcommand("coadjoint-slice", "Cross-section of a coadjoint action");
  coadj_cmd->add_option("algebra", algebra_path)->required();
  coadj_cmd->add_option("--constants", constants, "Candidate constants, comma separated");
  auto* line_cmd = app.add_subcommand("line-check", "Affine-line cross-section certificate for t^d1, t^d2");
  line_cmd->add_option("--d1", d1)->required();
  line_cmd->add_option("--d2", d2)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalid;
  }

  try {
    if (compose_cmd->parsed() || invert_cmd->parsed()) {
      const JonqElement g = compose_cmd->parsed() ? compose(load_element(a_path), load_element(b_path))
                                                  : invert(load_element(a_path));
      if (as_json) out << document_json(to_document(g)).dump(2) << "\n";
      else print_element(out, g);
      return kSuccess;
    }
    if (order_cmd->parsed()) {
      const OrderResult r = order(load_element(a_path), cap);
      if (as_json) {
        ordered_json j;
        j["kind"] = r.kind == OrderResult::Kind::Finite ? "finite" : r.kind == OrderResult::Kind::Infinite ? "infinite" : "unknown";
        if (r.kind != OrderResult::Kind::Infinite) j[r.kind == OrderResult::Kind::Finite ? "order" : "cap"] = r.value;
        out << j.dump(2) << "\n";
      } else {
        out << to_string(r) << "\n";
      }
      return r.kind == OrderResult::Kind::Unknown ? kUnresolved : kSuccess;
    }
    if (apply_cmd->parsed()) {
      const RatFunc r = apply(load_element(a_path), parse(expr));
      if (as_json) out << ordered_json{{"result", render(r)}}.dump(2) << "\n";
      else out << render(r) << "\n";
      return kSuccess;
    }
    if (inv_cmd->parsed()) {
      const auto gens = load_elements(paths);
      const ChainResult r = invariant_chain(gens, AnsatzBounds{deg, coeff_deg});
      bool unresolved = false;
      ordered_json levels = ordered_json::array();
      for (const auto& lv : r.levels) {
        unresolved = unresolved || lv.status == LevelRecord::Status::Unresolved;
        if (as_json) {
          ordered_json l{{"level", lv.level}, {"status", to_string(lv.status)}};
          if (lv.generator) l["generator"] = render(*lv.generator);
          else l["bounds"] = {{"max_degree_in_t", lv.bounds.max_degree_in_t}, {"max_coeff_degree", lv.bounds.max_coeff_degree}};
          levels.push_back(std::move(l));
        } else {
          out << "level " << lv.level << ": " << to_string(lv.status);
          if (lv.generator) out << " " << render(*lv.generator);
          else out << " (deg <= " << lv.bounds.max_degree_in_t << ", coeff-deg <= " << lv.bounds.max_coeff_degree << ")";
          out << "\n";
        }
      }
      if (as_json) {
        ordered_json j;
        j["levels"] = levels;
        j["generators"] = string_list(r.generators);
        j["pure_certified"] = r.pure_certified;
        out << j.dump(2) << "\n";
      } else {
        out << "generators: " << (r.generators.empty() ? "none" : join(r.generators)) << "\n";
        out << "pure_certified: " << (r.pure_certified ? "true" : "false") << "\n";
      }
      return unresolved ? kUnresolved : kSuccess;
    }
    if (closure_cmd->parsed()) {
      const auto gens = load_elements(paths);
      const ClosureResult r = subgroup_closure(gens, static_cast<std::size_t>(cap));
      if (as_json) {
        ordered_json j;
        j["overflow"] = r.overflow;
        if (!r.overflow) {
          j["size"] = r.elements.size();
          j["abelian"] = is_abelian(r.elements);
          ordered_json els = ordered_json::array();
          for (const auto& g : r.elements) els.push_back(document_json(to_document(g)));
          j["elements"] = els;
        }
        out << j.dump(2) << "\n";
      } else if (r.overflow) {
        out << "overflow: more than " << cap << " elements\n";
      } else {
        out << "size: " << r.elements.size() << "\n";
        out << "abelian: " << (is_abelian(r.elements) ? "true" : "false") << "\n";
        for (const auto& g : r.elements) {
          for (std::size_t i = 1; i <= g.dimension(); ++i) out << (i > 1 ? ", " : "") << "x" << i << " -> " << render(g.image(i));
          out << "\n";
        }
      }
      return r.overflow ? kUnresolved : kSuccess;
    }
    if (torus_cmd->parsed()) {
      const IntMatrix w = parse_weights(weights);
      const FaithfulnessReport f = faithfulness_report(w);
      const std::vector<RatFunc> invs = torus_monomial_invariants(w);
      if (as_json) {
        ordered_json j;
        j["faithful"] = f.faithful;
        j["trdeg"] = f.trdeg;
        j["invariants"] = string_list(invs);
        out << j.dump(2) << "\n";
      } else {
        out << "faithful: " << (f.faithful ? "true" : "false") << "\n";
        out << "trdeg: " << f.trdeg << "\n";
        out << "invariants: " << (invs.empty() ? "none" : join(invs)) << "\n";
      }
      return kSuccess;
    }
    if (slice_cmd->parsed() || coadj_cmd->parsed()) {
      const std::vector<Rational> candidates = constants.empty() ? default_candidates() : parse_constants(constants);
      std::vector<AdditiveFlow> flows;
      if (slice_cmd->parsed()) {
        for (const auto& doc : parse_map_documents(read_file(a_path))) {
          LoadedMap m = load_map(doc);
          if (!std::holds_alternative<AdditiveFlow>(m)) throw ValidationError(a_path + ": expected flow documents");
          flows.push_back(std::get<AdditiveFlow>(std::move(m)));
        }
      } else {
        flows = coadjoint_flows(parse_algebra(read_file(algebra_path)));
        if (!as_json)
          for (std::size_t e = 0; e < flows.size(); ++e) {
            out << "flow e" << e + 1 << ": ";
            print_flow(out, flows[e]);
          }
      }
      return report_slice(out, as_json, flows, candidates);
    }
    if (line_cmd->parsed()) {
      const LineCertificate c = no_affine_line_certificate(d1, d2);
      if (as_json) {
        ordered_json j;
        j["d1"] = c.d1;
        j["d2"] = c.d2;
        j["conditions"] = {{"sub", c.condition_sub}, {"d", c.condition_d}, {"gcd", c.condition_gcd}};
        ordered_json cases = ordered_json::array();
        for (const auto& lc : c.cases) cases.push_back({{"case", lc.label}, {"generic_count", lc.generic_count}});
        j["cases"] = cases;
        j["conclusion"] = c.no_line ? "no_line" : "candidate";
        if (c.candidate) j["candidate"] = *c.candidate;
        out << j.dump(2) << "\n";
      } else {
        out << "d1 = " << c.d1 << ", d2 = " << c.d2 << "\n";
        out << "conditions: d1 - d2 >= 2: " << (c.condition_sub ? "yes" : "no")
            << "; |d1|, |d2| >= 2: " << (c.condition_d ? "yes" : "no")
            << "; gcd = 1: " << (c.condition_gcd ? "yes" : "no") << "\n";
        for (const auto& lc : c.cases) out << "  " << lc.label << ": " << lc.generic_count << "\n";
        if (c.no_line) out << "no affine line is a rational cross-section\n";
        else out << "candidate line: " << *c.candidate << "\n";
      }
      return kSuccess;
    }
  } catch (const DegenerateError& e) {
    err << "unresolved: " << e.what() << "\n";
    return kUnresolved;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace jonq::cli
