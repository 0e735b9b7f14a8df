#include "commands.hpp"

#include <regex>
#include <sstream>

#include "vbraid/action.hpp"
#include "vbraid/braid.hpp"
#include "vbraid/builtins.hpp"
#include "vbraid/gsd.hpp"
#include "vbraid/homology.hpp"
#include "vbraid/linrep.hpp"
#include "vbraid/sdstruct.hpp"

namespace vbraid::cli {

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  os << prefix << ": ";
  if (j.is_string()) os << j.get<std::string>();
  else os << j.dump();
  os << "\n";
}

Output render(Json j) {
  std::ostringstream os;
  flatten(j, "", os);
  return {std::move(j), os.str()};
}

std::string matrix_table(const RingMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "\t" : "") << m.at(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

int require_strands(const Options& o) {
  if (o.strands < 1) throw DomainError("--strands must be at least 1");
  return o.strands;
}

ActionConfig action_config(const Options& o) {
  ActionConfig cfg;
  cfg.budget.depth = o.depth;
  cfg.budget.max_visited = o.max_visited;
  cfg.seed = o.seed;
  return cfg;
}

Json permutation_json(const Permutation& p) { return Json(p.images()); }

}  // namespace

Output validate_rack(const Options& o) {
  FiniteRackTable t = resolve_rack(o.structure);
  check_well_formed(t);
  Classification c = classify(t);
  bool sd = c.cls != RackClass::NotShelf;
  bool columns = true, idem = true;
  for (int b = 0; b < t.size; ++b) {
    std::vector<bool> hit(t.size, false);
    for (int a = 0; a < t.size; ++a) {
      if (hit[t.op[a][b]]) columns = false;
      hit[t.op[a][b]] = true;
    }
    if (t.op[b][b] != b) idem = false;
  }
  Json j{{"structure", o.structure},
         {"size", t.size},
         {"self_distributive", sd},
         {"columns_bijective", columns},
         {"idempotent", idem},
         {"class", to_string(c.cls)},
         {"spindle", c.spindle}};
  if (c.f_automorphism) j["f_automorphism"] = *c.f_automorphism;
  return render(j);
}

Output classify(const Options& o) {
  FiniteRackTable t = resolve_rack(o.structure);
  Classification c = classify(t);
  Json j{{"structure", o.structure}, {"class", to_string(c.cls)}, {"spindle", c.spindle}};
  if (c.f_automorphism) j["f_automorphism"] = *c.f_automorphism;
  if (c.inverse) j["inverse"] = table_to_json(*c.inverse);
  Output out = render(j);
  out.table = std::string(to_string(c.cls)) + "\n";
  return out;
}

Output act(const Options& o) {
  auto adapter = resolve_action(o.structure, action_config(o));
  const int n = o.strands > 0 ? o.strands : static_cast<int>(split_csv(o.tuple).size());
  VirtualBraidWord w = parse_word(o.word, n);
  std::string result = adapter->act(w, o.tuple);
  Json j{{"structure", adapter->name()}, {"word", to_string(w)}, {"input", o.tuple}, {"result", result}};
  return {j, result + "\n"};
}

Output invariants(const Options& o) {
  VirtualBraidWord w = parse_word(o.word, require_strands(o));
  RecoveredInvariants r = recover_invariants(w);
  Json under = Json::array();
  for (const auto& u : r.under) under.push_back(u);
  Json j{{"word", to_string(w)},
         {"forgetful", permutation_json(r.forgetful)},
         {"sigma_count", r.sigma_count},
         {"under", under}};
  return render(j);
}

Output distinguish(const Options& o) {
  const int n = require_strands(o);
  auto adapter = resolve_action(o.structure, action_config(o));
  VirtualBraidWord a = parse_word(o.w1, n), b = parse_word(o.w2, n);
  ActionDistinction d = adapter->distinguish(a, b);
  Json j{{"structure", adapter->name()},
         {"w1", to_string(a)},
         {"w2", to_string(b)},
         {"verdict", to_string(d.verdict)},
         {"probes", d.probes}};
  if (d.witness) {
    j["witness"] = *d.witness;
    j["outputs"] = {d.outputs->first, d.outputs->second};
  }
  Output out = render(j);
  out.table = std::string(to_string(d.verdict)) + "\n";
  return out;
}

Output scan(const Options& o) {
  auto adapter = resolve_action(o.structure, action_config(o));
  ScanOptions opt;
  opt.strands = require_strands(o);
  opt.max_len = o.max_len;
  opt.positive = o.positive;
  opt.reduced_only = !o.all_words;
  ActionScan s = adapter->scan(opt);
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
    Json out = Json::array();
    for (const auto& [x, y] : v) out.push_back({x, y});
    return out;
  };
  Json j{{"structure", adapter->name()},
         {"strands", opt.strands},
         {"max_len", opt.max_len},
         {"positive", opt.positive},
         {"words", s.words},
         {"probes", s.probes},
         {"collision_count", s.collisions.size()},
         {"undecided_count", s.undecided.size()},
         {"collisions", pairs(s.collisions)},
         {"undecided", pairs(s.undecided)}};
  return render(j);
}

Output rho(const Options& o) {
  LinearBraidedObject obj = resolve_object(o.object);
  VirtualBraidWord w = parse_word(o.word, require_strands(o));
  RingMatrix m = rho_word(obj, w);
  Json j{{"object", obj.name}, {"word", to_string(w)}, {"matrix", to_json(m)}};
  return {j, matrix_table(m)};
}

Output yb_check(const Options& o) {
  LinearBraidedObject obj = resolve_object(o.object);
  Json j = to_json(yb_check(obj));
  j["object"] = obj.name;
  return render(j);
}

Output twist(const Options& o) {
  LinearBraidedObject obj = twist(resolve_object(o.object));
  Json j{{"object", to_json(obj)}, {"yb", to_json(yb_check(obj))}};
  return {j, "sigma\n" + matrix_table(obj.sigma)};
}

Output gsd_validate(const Options& o) {
  GsdStructure g = resolve_gsd(o.structure);
  GsdReport r = validate(g);
  Json j{{"structure", g.name}, {"backend", to_string(g.backend)}, {"dim", g.dim}, {"report", to_json(r)}};
  if (r.is_shelf()) j["coalgebra"] = to_json(braided_coalgebra_check(g));
  return render(j);
}

RingMatrix parse_cut(const std::string& spec, const GsdStructure& g) {
  if (spec == "ones") return all_ones_covector(g.dim);
  if (spec == "counit") {
    if (!g.counit) throw DomainError("structure '" + g.name + "' has no counit");
    return *g.counit;
  }
  auto fields = split_csv(spec);
  if (static_cast<int>(fields.size()) != g.dim)
    throw DomainError("cut needs " + std::to_string(g.dim) + " comma-separated integers");
  RingMatrix e(1, g.dim);
  for (int i = 0; i < g.dim; ++i) {
    Integer v;
    if (v.set_str(fields[i], 10) != 0) throw DomainError("bad cut entry '" + fields[i] + "'");
    e.set(0, i, LaurentPoly(v));
  }
  return e;
}

std::pair<Integer, Integer> parse_diff(const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  static const std::regex term(R"(([+-]?)(?:(\d+)\*)?(ed|de))");
  Integer a = 0, b = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    std::smatch m;
    std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous))
      throw DomainError("bad differential '" + spec + "' (expected terms like 2*ed or -de)");
    if (!first && m[1].length() == 0) throw DomainError("bad differential '" + spec + "': missing sign");
    Integer k = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (m[1] == "-") k = -k;
    (m[3] == "ed" ? a : b) += k;
    pos += m.length(0);
    first = false;
  }
  if (first) throw DomainError("empty differential");
  return {a, b};
}

Output homology(const Options& o) {
  if (o.max_degree < 0) throw DomainError("--max-degree must be nonnegative");
  GsdStructure g = resolve_gsd(o.structure);
  RingMatrix eps = parse_cut(o.cut, g);
  auto [a, b] = parse_diff(o.diff);
  PresimplicialComplex cx = gsd_faces(g, eps, o.max_degree + 1);
  HomologyResult h = o.normalized ? normalized_homology(cx, a, b) : homology_of(cx, a, b);
  Json j{{"structure", g.name},
         {"cut", to_json(eps)},
         {"alpha", a.get_str()},
         {"beta", b.get_str()},
         {"normalized", o.normalized},
         {"degrees", to_json(h)}};
  std::ostringstream os;
  for (const auto& d : h.degrees) {
    os << "H_" << d.degree << ": betti " << d.betti << ", torsion [";
    for (std::size_t i = 0; i < d.torsion.size(); ++i) os << (i ? "," : "") << d.torsion[i].get_str();
    os << "] (rank " << d.rank << ")\n";
  }
  return {j, os.str()};
}

Output enumerate(const Options& o) {
  Json words = Json::array();
  std::string table;
  for_each_word(require_strands(o), o.max_len, o.positive, [&](const VirtualBraidWord& w) {
    words.push_back(to_string(w));
    table += (w.length() == 0 ? std::string("(empty)") : to_string(w)) + "\n";
  });
  Json j{{"strands", o.strands}, {"max_len", o.max_len}, {"positive", o.positive}, {"count", words.size()},
         {"words", words}};
  return {j, table};
}

}  // namespace vbraid::cli
