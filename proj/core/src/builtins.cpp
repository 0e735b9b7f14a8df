#include "vbraid/builtins.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>
#include <regex>

#include "vbraid/freegroup.hpp"
#include "vbraid/io.hpp"

namespace vbraid {

StructureConstants dual_numbers() {
  StructureConstants sc;
  sc.dim = 2;
  sc.mu.assign(2, std::vector<std::vector<Integer>>(2, std::vector<Integer>(2)));
  sc.mu[0][0][0] = 1;
  sc.mu[0][1][1] = 1;
  sc.mu[1][0][1] = 1;
  sc.nu = {1, 0};
  return sc;
}

StructureConstants leibniz_solv2() {
  StructureConstants sc;
  sc.dim = 2;
  sc.mu.assign(2, std::vector<std::vector<Integer>>(2, std::vector<Integer>(2)));
  sc.nu = {0, 0};
  std::vector<std::vector<std::vector<Integer>>> br(2, std::vector<std::vector<Integer>>(2, std::vector<Integer>(2)));
  br[0][1][0] = 1;
  sc.bracket = br;
  return sc;
}

Table s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      t[a][b] = index(ab);
    }
  return t;
}

std::vector<std::string> builtin_names() {
  return {"trivial1",  "trivial<m>",    "dihedral<m>",    "alexander<m>,<t>", "cyclic<m>",
          "laver<n>",  "cyclic-rack",   "conj-free<n>",   "vconj<n>",         "free-shelf",
          "free-virtual-shelf", "burau", "virtual-burau", "twisted-burau",   "uaa-dual-numbers",
          "leibniz-solv2", "group-s3"};
}

std::optional<FiniteRackTable> builtin_rack(const std::string& name) {
  std::smatch m;
  static const std::regex one(R"((trivial|dihedral|cyclic|laver)(\d+))");
  static const std::regex alex(R"(alexander(\d+),(-?\d+))");
  if (std::regex_match(name, m, one)) {
    const int k = std::stoi(m[2]);
    if (k < 1 || k > 64) throw DomainError("builtin size out of range in '" + name + "'");
    if (m[1] == "trivial") return trivial_quandle(k);
    if (m[1] == "dihedral") return dihedral_quandle(k);
    if (m[1] == "cyclic") return cyclic_rack_mod(k);
    if (k > 6) throw DomainError("laver tables are provided up to laver6");
    return laver_shelf(k);
  }
  if (std::regex_match(name, m, alex)) return alexander_quandle(std::stoi(m[1]), std::stoi(m[2]));
  return std::nullopt;
}

namespace {

bool is_file(const std::string& spec) { return std::filesystem::is_regular_file(spec); }

[[noreturn]] void unknown(const std::string& spec) {
  throw DomainError("unknown structure '" + spec + "' (not a builtin name or readable file)");
}

}  // namespace

FiniteRackTable resolve_rack(const std::string& spec) {
  if (auto t = builtin_rack(spec)) return *t;
  if (spec == "group-s3") return conjugation_quandle(s3_table());
  if (is_file(spec)) return rack_from_json(load_json_file(spec));
  unknown(spec);
}

namespace {

LinearBraidedObject object_from_constants(const StructureConstants& sc) {
  if (sc.group) return group_hopf_braiding(*sc.group);
  if (sc.bracket) return leibniz_braiding(sc);
  return assoc_braiding(sc);
}

GsdStructure gsd_from_constants(const StructureConstants& sc) {
  if (sc.group) return from_hopf_group(*sc.group);
  if (sc.bracket) return from_leibniz(sc);
  return from_uaa(sc);
}

}  // namespace

LinearBraidedObject resolve_object(const std::string& spec) {
  if (spec == "burau" || spec == "virtual-burau") return burau_object();
  if (spec == "twisted-burau") return twisted_burau_object();
  if (spec == "uaa-dual-numbers") {
    auto o = assoc_braiding(dual_numbers());
    o.name = spec;
    return o;
  }
  if (spec == "leibniz-solv2") {
    auto o = leibniz_braiding(leibniz_solv2());
    o.name = spec;
    return o;
  }
  if (spec == "group-s3") {
    auto o = group_hopf_braiding(s3_table());
    o.name = spec;
    return o;
  }
  if (auto t = builtin_rack(spec)) {
    auto o = linearize_rack(*t);
    o.name = spec;
    return o;
  }
  if (!is_file(spec)) unknown(spec);
  Json j = load_json_file(spec);
  if (j.is_object() && j.contains("sigma")) return braided_object_from_json(j);
  if (j.is_object() && j.contains("dim")) return object_from_constants(constants_from_json(j));
  return linearize_rack(rack_from_json(j));
}

GsdStructure resolve_gsd(const std::string& spec) {
  GsdStructure g;
  if (spec == "uaa-dual-numbers") {
    g = from_uaa(dual_numbers());
  } else if (spec == "leibniz-solv2") {
    g = from_leibniz(leibniz_solv2());
  } else if (spec == "group-s3") {
    g = from_hopf_group(s3_table());
  } else if (auto t = builtin_rack(spec)) {
    g = from_finite_shelf(*t);
  } else if (is_file(spec)) {
    Json j = load_json_file(spec);
    if (j.is_object() && j.contains("structure")) j = j.at("structure");
    if (j.is_object() && j.contains("backend")) return gsd_from_json(j);
    if (j.is_object() && j.contains("dim")) return gsd_from_constants(constants_from_json(j));
    return from_finite_shelf(rack_from_json(j));
  } else {
    unknown(spec);
  }
  g.name = spec;
  return g;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else cur += ch;
  }
  flush();
  return out;
}

namespace {

template <class T>
using ProbeFn = std::function<std::vector<std::vector<T>>(int)>;

template <class T>
std::vector<std::vector<T>> product_probes(const std::vector<T>& samples, int n, const ActionConfig& cfg) {
  std::vector<std::vector<T>> out;
  double total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(samples.size());
  if (total <= static_cast<double>(cfg.max_probes)) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<T> tuple;
      for (int i = 0; i < n; ++i) tuple.push_back(samples[idx[i]]);
      out.push_back(std::move(tuple));
      int k = n - 1;
      while (k >= 0 && ++idx[k] == samples.size()) idx[k--] = 0;
      if (k < 0) break;
    }
    return out;
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  for (std::size_t k = 0; k < cfg.max_probes; ++k) {
    std::vector<T> tuple;
    for (int i = 0; i < n; ++i) tuple.push_back(samples[pick(rng)]);
    out.push_back(std::move(tuple));
  }
  return out;
}

template <class C>
class TypedAdapter : public ActionAdapter {
 public:
  using T = typename C::Element;
  TypedAdapter(C carrier, ActionPair<T> pair, ProbeFn<T> probes)
      : carrier_(std::move(carrier)), pair_(std::move(pair)), probes_(std::move(probes)) {}

  std::string name() const override { return pair_.name; }

  std::string act(const VirtualBraidWord& w, const std::string& tuple) const override {
    std::vector<T> in;
    for (const auto& field : split_csv(tuple)) in.push_back(carrier_.parse(field));
    return show(apply_word(pair_, w, std::move(in)));
  }

  ActionDistinction distinguish(const VirtualBraidWord& w1, const VirtualBraidWord& w2) const override {
    auto probes = probes_(w1.strands());
    DistinguishResult r = vbraid::distinguish(pair_, w1, w2, probes);
    ActionDistinction out;
    out.verdict = r.verdict;
    out.probes = probes.size();
    if (r.witness) {
      const auto& probe = probes[*r.witness];
      out.witness = show(probe);
      out.outputs = std::make_pair(show(apply_word(pair_, w1, probe)), show(apply_word(pair_, w2, probe)));
    }
    return out;
  }

  ActionScan scan(const ScanOptions& opt) const override {
    auto probes = probes_(opt.strands);
    ScanReport r = collision_scan(pair_, opt, probes);
    ActionScan out;
    out.words = r.words;
    out.probes = probes.size();
    for (const auto& p : r.collisions) out.collisions.emplace_back(to_string(p.first), to_string(p.second));
    for (const auto& p : r.undecided) out.undecided.emplace_back(to_string(p.first), to_string(p.second));
    return out;
  }

  PairReport validate() const override { return validate_pair(pair_, carrier_.samples()); }

 private:
  std::string show(const std::vector<T>& tuple) const {
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) s += ",";
      s += pair_.show(tuple[i]);
    }
    return s;
  }

  C carrier_;
  ActionPair<T> pair_;
  ProbeFn<T> probes_;
};

template <class C>
std::unique_ptr<ActionAdapter> make_adapter(C carrier, ActionPair<typename C::Element> pair,
                                            const ActionConfig& cfg) {
  using T = typename C::Element;
  auto samples = carrier.samples();
  ProbeFn<T> probes = [samples, cfg](int n) { return product_probes(samples, n, cfg); };
  return std::make_unique<TypedAdapter<C>>(std::move(carrier), std::move(pair), std::move(probes));
}

}  // namespace

std::unique_ptr<ActionAdapter> resolve_action(const std::string& spec, const ActionConfig& cfg) {
  std::smatch m;
  static const std::regex conj(R"(conj-free(\d+))");
  static const std::regex vconj(R"(vconj(\d+))");
  if (spec == "cyclic-rack") {
    CyclicRack c;
    return make_adapter(c, rack_pair(c, spec), cfg);
  }
  if (spec == "free-shelf" || spec == "free-virtual-shelf") {
    const bool virt = spec == "free-virtual-shelf";
    FreeShelfCarrier c;
    c.virtual_shift = virt;
    c.budget = cfg.budget;
    auto pair = virt ? free_virtual_shelf_pair(cfg.budget) : free_shelf_pair(cfg.budget);
    ProbeFn<ShelfTerm> probes = [virt](int n) { return default_term_probes(n, virt); };
    return std::make_unique<TypedAdapter<FreeShelfCarrier>>(c, std::move(pair), std::move(probes));
  }
  if (std::regex_match(spec, m, conj)) {
    ConjFreeCarrier c;
    c.n = std::stoi(m[1]);
    if (c.n < 1) throw DomainError("conj-free needs at least one generator");
    return make_adapter(c, rack_pair(c, spec), cfg);
  }
  if (std::regex_match(spec, m, vconj)) {
    VConjCarrier c;
    c.n = std::stoi(m[1]);
    if (c.n < 1) throw DomainError("vconj needs at least one generator");
    return make_adapter(c, virtual_rack_pair(c, spec), cfg);
  }
  FiniteCarrier c(resolve_rack(spec));
  auto pair = c.has_f() ? virtual_rack_pair(c, spec) : rack_pair(c, spec);
  return make_adapter(c, std::move(pair), cfg);
}

}  // namespace vbraid
