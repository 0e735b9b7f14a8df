// Writes the GSD fixture corpus. Set structures on two points are enumerated
// and judged by evaluating every axiom element-wise on tuples; the first
// structure failing exactly one axiom is kept for each axiom.
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "vbraid/builtins.hpp"
#include "vbraid/io.hpp"

namespace {

using namespace vbraid;

constexpr int kSize = 2;

struct SetCandidate {
  std::array<std::pair<int, int>, kSize> delta;
  std::array<std::array<int, kSize>, kSize> op;
  std::array<std::array<int, kSize>, kSize> op_tilde;
};

// Element-wise verdicts; the order matches the report's failure order.
std::map<std::string, bool> judge(const SetCandidate& s) {
  auto d1 = [&](int a) { return s.delta[a].first; };
  auto d2 = [&](int a) { return s.delta[a].second; };
  auto op = [&](int a, int b) { return s.op[a][b]; };
  auto opt = [&](int a, int b) { return s.op_tilde[a][b]; };
  bool coassoc = true, weak = true, gsd = true, compat = true, counit = true, tilde = true;
  for (int a = 0; a < kSize; ++a) {
    coassoc &= d1(d1(a)) == d1(a) && d2(d1(a)) == d1(d2(a)) && d2(a) == d2(d2(a));
    const int x = d1(d1(a)), y = d2(d1(a));
    // (d1 x, d2 x, y, d2 a) against its middle swap.
    weak &= d2(x) == y;
    counit &= d1(a) == a;
    for (int b = 0; b < kSize; ++b) {
      compat &= d1(op(a, b)) == op(d1(a), d1(b)) && d2(op(a, b)) == op(d2(a), d2(b));
      tilde &= opt(op(a, d2(b)), d1(b)) == a && op(opt(a, d2(b)), d1(b)) == a;
      for (int c = 0; c < kSize; ++c) gsd &= op(op(a, b), c) == op(op(a, d1(c)), op(b, d2(c)));
    }
  }
  return {{"coassociativity", coassoc},    {"weak_cocommutativity", weak}, {"gsd", gsd},
          {"bialgebra_compatibility", compat}, {"right_counit", counit}, {"twisted_inverse", tilde}};
}

const std::array<const char*, 6> kAxioms = {"coassociativity",         "weak_cocommutativity", "gsd",
                                            "bialgebra_compatibility", "right_counit",         "twisted_inverse"};

Json expected_json(const std::map<std::string, bool>& verdicts) {
  Json fails = Json::array();
  Json axioms = Json::object();
  for (const char* name : kAxioms) {
    auto it = verdicts.find(name);
    if (it == verdicts.end()) continue;
    axioms[name] = it->second;
    if (!it->second) fails.push_back(name);
  }
  return {{"axioms", axioms}, {"fails", fails}};
}

SetCandidate decode(int code) {
  SetCandidate s;
  for (int a = 0; a < kSize; ++a) {
    const int v = code % (kSize * kSize);
    code /= kSize * kSize;
    s.delta[a] = {v / kSize, v % kSize};
  }
  for (auto* t : {&s.op, &s.op_tilde})
    for (int a = 0; a < kSize; ++a)
      for (int b = 0; b < kSize; ++b) {
        (*t)[a][b] = code % kSize;
        code /= kSize;
      }
  return s;
}

GsdStructure to_structure(const SetCandidate& s, const std::string& name) {
  SetGsdData data;
  data.size = kSize;
  data.delta.assign(s.delta.begin(), s.delta.end());
  data.triangle.assign(kSize, std::vector<int>(kSize));
  Table tilde(kSize, std::vector<int>(kSize));
  for (int a = 0; a < kSize; ++a)
    for (int b = 0; b < kSize; ++b) {
      data.triangle[a][b] = s.op[a][b];
      tilde[a][b] = s.op_tilde[a][b];
    }
  data.triangle_tilde = tilde;
  return from_set_data(data, name);
}

void write(const std::filesystem::path& dir, const std::string& file, const std::string& description,
           const GsdStructure& g, const Json& expected) {
  Json j{{"description", description}, {"structure", to_json(g)}, {"expected", expected}};
  std::ofstream(dir / file) << j.dump(2) << "\n";
  std::cout << file << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: vbraid_fixture_search <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  constexpr int kCodes = 16 * 16 * 16 * 16;
  std::map<std::string, int> single;
  std::optional<int> valid;
  for (int code = 0; code < kCodes; ++code) {
    auto v = judge(decode(code));
    std::vector<std::string> failed;
    for (const auto& [k, ok] : v)
      if (!ok) failed.push_back(k);
    if (failed.empty() && !valid) valid = code;
    if (failed.size() == 1 && !single.count(failed[0])) single[failed[0]] = code;
  }
  for (const char* axiom : kAxioms) {
    auto it = single.find(axiom);
    if (it == single.end()) {
      std::cerr << "no two-point structure fails only " << axiom << "\n";
      continue;
    }
    const SetCandidate s = decode(it->second);
    write(dir, std::string("gsd_only_") + axiom + ".json", std::string("two-point set structure failing only ") + axiom,
          to_structure(s, std::string("only-") + axiom), expected_json(judge(s)));
  }
  if (valid) {
    const SetCandidate s = decode(*valid);
    write(dir, "gsd_set_valid.json", "two-point set structure satisfying every axiom", to_structure(s, "set-valid"),
          expected_json(judge(s)));
  }

  // Coassociativity forces weak cocommutativity for set maps, so this axiom
  // gets a linear witness: the path coalgebra e1, e2, x with
  // x -> e1 (x) x + x (x) e2 and the zero operation.
  RingMatrix delta(9, 3);
  delta.set(0, 0, 1);
  delta.set(4, 1, 1);
  delta.set(0 * 3 + 2, 2, 1);
  delta.set(2 * 3 + 1, 2, 1);
  GsdStructure path = from_linear(3, delta, RingMatrix(3, 9), {}, {}, "path-coalgebra");
  write(dir, "gsd_only_weak_cocommutativity.json", "path coalgebra with the zero operation", path,
        {{"axioms",
          {{"coassociativity", true}, {"weak_cocommutativity", false}, {"gsd", true}, {"bialgebra_compatibility", true}}},
         {"fails", {"weak_cocommutativity"}}});

  // 1 * x = 2x keeps the right unit and breaks associativity.
  StructureConstants uaa = dual_numbers();
  uaa.mu[0][1][1] = 2;
  GsdStructure g = from_uaa(uaa);
  g.name = "uaa-perturbed";
  write(dir, "gsd_uaa_perturbed.json", "dual numbers with a non-associative product", g,
        {{"axioms",
          {{"coassociativity", true}, {"weak_cocommutativity", true}, {"gsd", false}, {"bialgebra_compatibility", true}}},
         {"fails", {"gsd"}}});

  // [a, a] = a on a line breaks the Leibniz identity.
  StructureConstants lb;
  lb.dim = 1;
  lb.bracket = std::vector<std::vector<std::vector<Integer>>>{{{Integer(1)}}};
  g = from_leibniz(lb);
  g.name = "leibniz-perturbed";
  write(dir, "gsd_leibniz_perturbed.json", "one-dimensional bracket violating the Leibniz identity", g,
        {{"axioms",
          {{"coassociativity", true},
           {"weak_cocommutativity", true},
           {"gsd", false},
           {"bialgebra_compatibility", true},
           {"right_counit", true},
           {"twisted_inverse", true}}},
         {"fails", {"gsd"}}});
  return 0;
}
