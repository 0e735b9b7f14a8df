#include "vbraid/io.hpp"

#include <fstream>
#include <limits>

namespace vbraid {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) {
    const long x = v.get_si();
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      return Json(static_cast<std::int64_t>(x));
  }
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    auto v = parse_laurent(j.get<std::string>()).as_integer();
    if (!v) throw DomainError("expected an integer, got '" + j.get<std::string>() + "'");
    return *v;
  }
  throw DomainError("expected an integer entry");
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({integer_to_json(c), Json(e)}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_number_integer()) return LaurentPoly(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_laurent(j.get<std::string>());
  if (!j.is_array()) throw DomainError("polynomial must be a term list, an integer or a string");
  LaurentPoly out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_array() || term[1].size() != 4)
      throw DomainError("polynomial terms are [coeff, [et, es, eu, ev]]");
    Exponent e{};
    for (int k = 0; k < 4; ++k) e[k] = term[1][k].get<int>();
    out += LaurentPoly::monomial(integer_from_json(term[0]), e);
  }
  return out;
}

Json to_json(const RingMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, e] : m.row(i)) entries.push_back(Json::array({i, j, to_json(e)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RingMatrix matrix_from_json(const Json& j) {
  if (j.is_object()) {
    const std::size_t rows = require(j, "rows").get<std::size_t>();
    const std::size_t cols = require(j, "cols").get<std::size_t>();
    RingMatrix m(rows, cols);
    const Json& entries = require(j, "entries");
    if (!entries.is_array()) throw DomainError("'entries' must be an array");
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 3) throw DomainError("matrix entries are [row, col, poly]");
      const std::size_t r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
      if (r >= rows || c >= cols) throw DomainError("matrix entry index out of range");
      m.add_to(r, c, laurent_from_json(e[2]));
    }
    return m;
  }
  if (!j.is_array()) throw DomainError("matrix must be an object or an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  RingMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, laurent_from_json(j[i][c]));
  }
  return m;
}

Json table_to_json(const Table& t) {
  Json out = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (int v : row) r.push_back(v + 1);
    out.push_back(std::move(r));
  }
  return out;
}

Table table_from_json(const Json& j, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size) throw DomainError("table must have one row per element");
  Table t;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != size) throw DomainError("table rows must be full");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw DomainError("table entries must be integers");
      int x = v.get<int>();
      if (x < 1 || x > size) throw DomainError("table entry " + std::to_string(x) + " out of range");
      r.push_back(x - 1);
    }
    t.push_back(std::move(r));
  }
  return t;
}

Json to_json(const FiniteRackTable& t) {
  Json out{{"size", t.size}, {"op", table_to_json(t.op)}};
  if (t.inv) out["inv"] = table_to_json(*t.inv);
  if (t.f) {
    Json f = Json::array();
    for (int v : *t.f) f.push_back(v + 1);
    out["f"] = f;
  }
  return out;
}

FiniteRackTable rack_from_json(const Json& j) {
  FiniteRackTable t;
  if (j.is_array()) {
    t.size = static_cast<int>(j.size());
    t.op = table_from_json(j, t.size);
    return t;
  }
  const Json& op = require(j, "op");
  t.size = j.contains("size") ? require_int(j, "size") : static_cast<int>(op.size());
  t.op = table_from_json(op, t.size);
  if (j.contains("inv")) t.inv = table_from_json(j.at("inv"), t.size);
  if (j.contains("f")) {
    const Json& f = j.at("f");
    if (!f.is_array() || static_cast<int>(f.size()) != t.size) throw DomainError("f must list one image per element");
    std::vector<int> img;
    for (const auto& v : f) {
      int x = v.get<int>();
      if (x < 1 || x > t.size) throw DomainError("f value out of range");
      img.push_back(x - 1);
    }
    t.f = img;
  }
  check_well_formed(t);
  return t;
}

namespace {

using Tensor3 = std::vector<std::vector<std::vector<Integer>>>;

Json tensor_to_json(const Tensor3& t) {
  Json out = Json::array();
  for (const auto& a : t) {
    Json ja = Json::array();
    for (const auto& b : a) {
      Json jb = Json::array();
      for (const auto& v : b) jb.push_back(integer_to_json(v));
      ja.push_back(std::move(jb));
    }
    out.push_back(std::move(ja));
  }
  return out;
}

Tensor3 tensor_from_json(const Json& j, std::size_t d) {
  if (!j.is_array() || j.size() != d) throw DomainError("structure tensor has wrong shape");
  Tensor3 t(d, std::vector<std::vector<Integer>>(d, std::vector<Integer>(d)));
  for (std::size_t a = 0; a < d; ++a) {
    if (!j[a].is_array() || j[a].size() != d) throw DomainError("structure tensor has wrong shape");
    for (std::size_t b = 0; b < d; ++b) {
      if (!j[a][b].is_array() || j[a][b].size() != d) throw DomainError("structure tensor has wrong shape");
      for (std::size_t k = 0; k < d; ++k) t[a][b][k] = integer_from_json(j[a][b][k]);
    }
  }
  return t;
}

}  // namespace

Json to_json(const StructureConstants& sc) {
  Json nu = Json::array();
  for (const auto& v : sc.nu) nu.push_back(integer_to_json(v));
  Json out{{"dim", sc.dim}, {"mu", tensor_to_json(sc.mu)}, {"nu", nu}};
  if (sc.bracket) out["bracket"] = tensor_to_json(*sc.bracket);
  if (sc.group) out["group"] = table_to_json(*sc.group);
  return out;
}

StructureConstants constants_from_json(const Json& j) {
  StructureConstants sc;
  sc.dim = require_int(j, "dim");
  if (sc.dim < 1) throw DomainError("dim must be positive");
  const std::size_t d = sc.dim;
  if (j.contains("mu")) sc.mu = tensor_from_json(j.at("mu"), d);
  else sc.mu = Tensor3(d, std::vector<std::vector<Integer>>(d, std::vector<Integer>(d)));
  sc.nu.assign(d, 0);
  if (j.contains("nu")) {
    const Json& nu = j.at("nu");
    if (!nu.is_array() || nu.size() != d) throw DomainError("nu has wrong length");
    for (std::size_t i = 0; i < d; ++i) sc.nu[i] = integer_from_json(nu[i]);
  }
  if (j.contains("bracket")) sc.bracket = tensor_from_json(j.at("bracket"), d);
  if (j.contains("group")) sc.group = table_from_json(j.at("group"), sc.dim);
  return sc;
}

Json to_json(const LinearBraidedObject& o) {
  Json out{{"name", o.name}, {"dim", o.dim}, {"mode", to_string(o.mode)}, {"sigma", to_json(o.sigma)},
           {"c", to_json(o.c)}};
  if (o.sigma_inv) out["sigma_inv"] = to_json(*o.sigma_inv);
  if (o.f) out["f"] = to_json(*o.f);
  return out;
}

LinearBraidedObject braided_object_from_json(const Json& j) {
  LinearBraidedObject o;
  o.name = j.value("name", std::string("object"));
  o.dim = require_int(j, "dim");
  if (o.dim < 1) throw DomainError("dim must be positive");
  const std::string mode = j.value("mode", std::string("tensor"));
  if (mode == "sum") o.mode = Mode::Sum;
  else if (mode == "tensor") o.mode = Mode::Tensor;
  else throw DomainError("mode must be 'sum' or 'tensor'");
  o.sigma = matrix_from_json(require(j, "sigma"));
  o.c = j.contains("c") ? matrix_from_json(j.at("c")) : flip_matrix(o.dim, o.mode);
  if (j.contains("sigma_inv")) o.sigma_inv = matrix_from_json(j.at("sigma_inv"));
  if (j.contains("f")) o.f = matrix_from_json(j.at("f"));
  const std::size_t n2 = two_strand_dim(o.dim, o.mode);
  auto square = [n2](const RingMatrix& m) { return m.rows() == n2 && m.cols() == n2; };
  if (!square(o.sigma) || !square(o.c) || (o.sigma_inv && !square(*o.sigma_inv)))
    throw DomainError("braiding matrices must be " + std::to_string(n2) + "x" + std::to_string(n2));
  return o;
}

namespace {

// Decodes a 0/1 matrix with exactly one 1 per column into digit tuples.
std::vector<std::vector<int>> set_map_images(const RingMatrix& m, int size, int out_arity) {
  std::vector<std::vector<int>> images(m.cols());
  RingMatrix t = m.transpose();
  for (std::size_t col = 0; col < t.rows(); ++col) {
    const auto& entries = t.row(col);
    if (entries.size() != 1 || !(entries.begin()->second == LaurentPoly(1)))
      throw DomainError("matrix is not the linearization of a set map");
    std::size_t row = entries.begin()->first;
    std::vector<int> digits(out_arity);
    for (int p = out_arity - 1; p >= 0; --p) {
      digits[p] = static_cast<int>(row % size);
      row /= size;
    }
    images[col] = digits;
  }
  return images;
}

Table set_table(const RingMatrix& m, int size) {
  auto images = set_map_images(m, size, 1);
  Table t(size, std::vector<int>(size));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) t[a][b] = images[a * size + b][0];
  return t;
}

}  // namespace

Json to_json(const GsdStructure& g) {
  Json out{{"backend", to_string(g.backend)}, {"name", g.name}};
  if (g.backend == Backend::Set) {
    out["size"] = g.dim;
    Json delta = Json::array();
    for (const auto& img : set_map_images(g.delta, g.dim, 2)) delta.push_back({img[0] + 1, img[1] + 1});
    out["delta"] = delta;
    out["triangle"] = table_to_json(set_table(g.triangle, g.dim));
    if (g.triangle_tilde) out["triangle_tilde"] = table_to_json(set_table(*g.triangle_tilde, g.dim));
    return out;
  }
  out["dim"] = g.dim;
  out["delta"] = to_json(g.delta);
  out["triangle"] = to_json(g.triangle);
  if (g.counit) out["counit"] = to_json(*g.counit);
  if (g.triangle_tilde) out["triangle_tilde"] = to_json(*g.triangle_tilde);
  return out;
}

GsdStructure gsd_from_json(const Json& j) {
  const std::string backend = require(j, "backend").get<std::string>();
  const std::string name = j.value("name", backend);
  if (backend == "set") {
    SetGsdData data;
    data.size = require_int(j, "size");
    if (data.size < 1) throw DomainError("size must be positive");
    const Json& delta = require(j, "delta");
    if (!delta.is_array() || static_cast<int>(delta.size()) != data.size)
      throw DomainError("delta must list one pair per element");
    for (const auto& pr : delta) {
      if (!pr.is_array() || pr.size() != 2) throw DomainError("delta entries must be pairs");
      int a = pr[0].get<int>(), b = pr[1].get<int>();
      if (a < 1 || a > data.size || b < 1 || b > data.size) throw DomainError("delta value out of range");
      data.delta.emplace_back(a - 1, b - 1);
    }
    data.triangle = table_from_json(require(j, "triangle"), data.size);
    if (j.contains("triangle_tilde")) data.triangle_tilde = table_from_json(j.at("triangle_tilde"), data.size);
    return from_set_data(data, name);
  }
  if (backend == "linear") {
    std::optional<RingMatrix> counit, tilde;
    if (j.contains("counit")) counit = matrix_from_json(j.at("counit"));
    if (j.contains("triangle_tilde")) tilde = matrix_from_json(j.at("triangle_tilde"));
    return from_linear(require_int(j, "dim"), matrix_from_json(require(j, "delta")),
                       matrix_from_json(require(j, "triangle")), counit, tilde, name);
  }
  throw DomainError("unknown backend '" + backend + "'");
}

Json to_json(const GsdReport& r) {
  Json out{{"coassociativity", r.coassociative},
           {"weak_cocommutativity", r.weakly_cocommutative},
           {"gsd", r.gsd},
           {"bialgebra_compatibility", r.compatible},
           {"left_cocommutativity", r.left_cocommutative},
           {"delta_idempotence", r.delta_idempotent}};
  out["right_counit"] = r.right_counit ? Json(*r.right_counit) : Json(nullptr);
  out["twisted_inverse"] = r.twisted_inverse ? Json(*r.twisted_inverse) : Json(nullptr);
  out["shelf"] = r.is_shelf();
  out["rack"] = r.is_rack();
  out["spindle"] = r.is_spindle();
  out["failures"] = r.failures();
  return out;
}

Json to_json(const CoalgebraReport& r) {
  return Json{{"semi_braided", r.semi}, {"second_identity", r.second}, {"sigma_cocommutative", r.cocommutative}};
}

namespace {

Json family_json(const FamilyReport& f) {
  Json ids = Json::object();
  for (const auto& [k, v] : f.identities) ids[k] = v;
  return Json{{"identities", ids}, {"level", to_string(f.level)}, {"failing", f.failing()}};
}

}  // namespace

Json to_json(const ComplexReport& r) {
  Json out{{"first", family_json(r.first)}};
  if (r.second) out["second"] = family_json(*r.second);
  if (r.mixed_prime) out["simpl1_prime"] = *r.mixed_prime;
  if (r.mixed_double_prime) out["simpl1_double_prime"] = *r.mixed_double_prime;
  return out;
}

Json to_json(const HomologyResult& h) {
  Json out = Json::array();
  for (const auto& d : h.degrees) {
    Json tors = Json::array();
    for (const auto& t : d.torsion) tors.push_back(integer_to_json(t));
    out.push_back(Json{{"degree", d.degree}, {"rank", d.rank}, {"betti", d.betti}, {"torsion", tors}});
  }
  return out;
}

Json to_json(const YbReport& r) {
  Json out{{"sigma_braid", r.sigma_braid},
           {"c_braid", r.c_braid},
           {"c_involutive", r.c_involutive},
           {"mixed", r.mixed},
           {"ok", r.ok()}};
  out["inverse"] = r.inverse ? Json(*r.inverse) : Json(nullptr);
  out["f_compatible"] = r.f_compatible ? Json(*r.f_compatible) : Json(nullptr);
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace vbraid
