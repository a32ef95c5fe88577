#include "compalg/io.hpp"

#include <cctype>
#include <regex>

namespace compalg::io {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  require(j.is_string(), Errc::ParseError, "expected a rational, got " + j.dump());
  const std::string s = j.get<std::string>();
  static const std::regex form(R"(\s*[-+]?\d+(\s*/\s*\d+)?\s*)");
  require(std::regex_match(s, form), Errc::ParseError, "bad rational '" + s + "'");
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '+') compact += c;
  mpq_class q;
  require(q.set_str(compact, 10) == 0 && q.get_den() != 0, Errc::ParseError,
          "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

Field parse_field(const std::string& text) {
  static const std::regex form(R"(\s*(Q|Fp:(\d+))\s*(\[\s*sqrt\(\s*([-+]?\d+(/\d+)?)\s*\)\s*\])?\s*)");
  std::smatch m;
  require(std::regex_match(text, m, form), Errc::ParseError,
          "bad field '" + text + "'; expected Q, Fp:p or k[sqrt(a)]");
  Field base = m[2].matched ? FieldSpec::prime(mpz_class(m[2].str()))
                            : FieldSpec::rationals();
  if (!m[3].matched) return base;
  return FieldSpec::quad_ext(base,
                             Scalar::from_rational(base, rational_from_json(m[4].str())));
}

json to_json(const Scalar& s) {
  if (s.field()->is_base()) return rational_to_string(s.re());
  return json::array({rational_to_string(s.re()), rational_to_string(s.im())});
}

Scalar scalar_from_json(const json& j, const Field& field) {
  if (field->is_base()) return Scalar::from_rational(field, rational_from_json(j));
  require(j.is_array() && j.size() == 2, Errc::ParseError,
          "quadratic scalars are [x, y] pairs, got " + j.dump());
  return Scalar::quad(field, rational_from_json(j[0]), rational_from_json(j[1]));
}

json to_json(const Algebra& a) {
  json j;
  j["field"] = a->base()->to_string();
  if (a->is_matrix_form()) {
    j["form"] = "mat2";
  } else {
    j["a"] = to_json(a->a());
    j["b"] = to_json(a->b());
  }
  return j;
}

Algebra algebra_from_json(const json& j) {
  require(j.is_object() && j.contains("field"), Errc::ParseError,
          "algebra objects need a field");
  Field k = parse_field(j.at("field").get<std::string>());
  if (j.contains("form")) {
    require(j.at("form") == "mat2", Errc::ParseError, "unknown algebra form");
    return QuatAlgebra::split_matrix(k);
  }
  require(j.contains("a") && j.contains("b"), Errc::ParseError,
          "quaternion algebras need a and b");
  return QuatAlgebra::make(k, scalar_from_json(j.at("a"), k), scalar_from_json(j.at("b"), k));
}

json to_json(const QuaternionElement& z) {
  json arr = json::array();
  for (const auto& c : z.coeffs()) arr.push_back(to_json(c));
  return arr;
}

QuaternionElement element_from_json(const json& j, const Algebra& a) {
  require(j.is_array() && j.size() == 4, Errc::ParseError,
          "elements are four coefficients, got " + j.dump());
  const Field& k = a->base();
  return QuaternionElement(a, {scalar_from_json(j[0], k), scalar_from_json(j[1], k),
                               scalar_from_json(j[2], k), scalar_from_json(j[3], k)});
}

json to_json(const CompMatrix& z) {
  json j;
  j["algebra"] = to_json(z.algebra());
  j["rows"] = z.rows();
  j["cols"] = z.cols();
  json rows = json::array();
  for (std::size_t i = 0; i < z.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < z.cols(); ++c) row.push_back(to_json(z(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

CompMatrix comp_matrix_from_json(const json& j) {
  require(j.is_object() && j.contains("algebra"), Errc::ParseError,
          "matrix objects need an algebra");
  Algebra a = algebra_from_json(j.at("algebra"));
  if (j.contains("blocks")) {
    const json& b = j.at("blocks");
    require(b.is_array() && !b.empty(), Errc::ParseError, "blocks must be rows");
    std::vector<Scalar> data;
    const std::size_t cols = b[0].size();
    for (const auto& row : b) {
      require(row.is_array() && row.size() == cols, Errc::ParseError, "ragged blocks");
      for (const auto& x : row) data.push_back(scalar_from_json(x, a->base()));
    }
    FieldMatrix flat = FieldMatrix::from_scalars(a->base(), b.size(), cols, std::move(data));
    return unflatten_split(flat, a);
  }
  require(j.contains("entries"), Errc::ParseError, "matrix objects need entries or blocks");
  const json& e = j.at("entries");
  require(e.is_array() && !e.empty(), Errc::ParseError, "entries must be rows");
  const std::size_t rows = e.size(), cols = e[0].size();
  if (j.contains("rows"))
    require(j.at("rows").get<std::size_t>() == rows, Errc::DimensionMismatch, "row count");
  if (j.contains("cols"))
    require(j.at("cols").get<std::size_t>() == cols, Errc::DimensionMismatch, "column count");
  std::vector<QuaternionElement> entries;
  for (const auto& row : e) {
    require(row.is_array() && row.size() == cols, Errc::ParseError, "ragged entries");
    for (const auto& z : row) entries.push_back(element_from_json(z, a));
  }
  return CompMatrix::from_elements(a, rows, cols, std::move(entries));
}

json to_json(const FieldMatrix& m) {
  json j;
  j["field"] = m.field()->to_string();
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

FieldMatrix field_matrix_from_json(const json& j) {
  Field k = parse_field(j.at("field").get<std::string>());
  const json& e = j.at("entries");
  require(e.is_array() && !e.empty(), Errc::ParseError, "entries must be rows");
  const std::size_t cols = e[0].size();
  std::vector<Scalar> data;
  for (const auto& row : e) {
    require(row.is_array() && row.size() == cols, Errc::ParseError, "ragged entries");
    for (const auto& x : row) data.push_back(scalar_from_json(x, k));
  }
  return FieldMatrix::from_scalars(k, e.size(), cols, std::move(data));
}

json to_json(const UniPoly& p) {
  json j = json::object();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0) j[std::to_string(k)] = p.coeffs()[k].get_str();
  return j;
}

UniPoly poly_from_json(const json& j) {
  require(j.is_object(), Errc::ParseError, "polynomials are degree maps");
  std::vector<mpz_class> c;
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    unsigned long k = std::stoul(key, &pos);
    require(pos == key.size(), Errc::ParseError, "bad degree '" + key + "'");
    mpq_class q = rational_from_json(value);
    require(q.get_den() == 1, Errc::ParseError, "polynomial coefficients are integers");
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] = q.get_num();
  }
  return UniPoly(std::move(c));
}

json to_json(const LaurentPoly& f) {
  json j;
  j["n"] = f.nvars();
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"exponent", e}, {"coeff", rational_to_string(c)}});
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly laurent_from_json(const json& j) {
  if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
  LaurentPoly f(j.at("n").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    f.add_term(t.at("exponent").get<Exponent>(), rational_from_json(t.at("coeff")));
  return f;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix int_matrix_from_json(const json& j) {
  IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const json& e = j.at("entries");
  require(e.size() == m.rows(), Errc::DimensionMismatch, "row count");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    require(e[i].size() == m.cols(), Errc::DimensionMismatch, "column count");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class q = rational_from_json(e[i][c]);
      require(q.get_den() == 1, Errc::ParseError, "integer matrices hold integers");
      m(i, c) = q.get_num();
    }
  }
  return m;
}

json to_json(const Multivector& x) {
  json coeffs = json::object();
  for (std::uint32_t a : x.algebra()->blade_order())
    if (x[a] != 0) coeffs[a == 0 ? "0" : blade_name(a)] = rational_to_string(x[a]);
  return {{"signature", {x.algebra()->p(), x.algebra()->q()}}, {"coeffs", coeffs}};
}

Multivector multivector_from_json(const json& j) {
  const json& sig = j.at("signature");
  require(sig.is_array() && sig.size() == 2, Errc::ParseError, "signature is [p, q]");
  Clifford alg = CliffordAlgebra::make(sig[0].get<std::size_t>(), sig[1].get<std::size_t>());
  Multivector x(alg);
  for (const auto& [key, value] : j.at("coeffs").items()) {
    std::uint32_t mask = key == "0" ? 0 : parse_blade(key, alg->n());
    x[mask] = rational_from_json(value);
  }
  return x;
}

json to_json(const SignedPermGroup& g) {
  if (g.flavor() != GroupFlavor::Product)
    return {{"flavor", to_string(g.flavor())}, {"n", g.n()}};
  json parts = json::array();
  for (const auto& p : g.parts()) parts.push_back(to_json(p));
  return {{"flavor", "Product"}, {"parts", parts}};
}

SignedPermGroup group_from_json(const json& j) {
  const std::string flavor = j.at("flavor").get<std::string>();
  if (flavor == "Product") {
    std::vector<SignedPermGroup> parts;
    for (const auto& p : j.at("parts")) parts.push_back(group_from_json(p));
    return SignedPermGroup::product(std::move(parts));
  }
  return SignedPermGroup::from_name(flavor, j.at("n").get<std::size_t>());
}

json to_json(const Classification& c) {
  return {{"base", to_string(c.base)},
          {"matrix_size", c.matrix_size},
          {"direct_sum", c.direct_sum}};
}

Classification classification_from_json(const json& j) {
  Classification c;
  const std::string base = j.at("base").get<std::string>();
  if (base == "R")
    c.base = CliffordBase::R;
  else if (base == "C")
    c.base = CliffordBase::C;
  else if (base == "H")
    c.base = CliffordBase::H;
  else
    fail(Errc::ParseError, "unknown base '" + base + "'");
  c.matrix_size = j.at("matrix_size").get<std::size_t>();
  c.direct_sum = j.at("direct_sum").get<bool>();
  return c;
}

json to_json(const BoundReport& r) {
  json j;
  j["algebra"] = to_json(r.params.algebra);
  j["m"] = r.params.m;
  j["n"] = r.params.n;
  j["d"] = r.params.d;
  j["seed"] = r.params.seed;
  j["m0"] = r.m0;
  j["family_size"] = r.family_size;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  if (r.counterexample) {
    json ce;
    ce["trial"] = r.counterexample->trial;
    ce["reason"] = r.counterexample->reason;
    json ms = json::array();
    for (const auto& m : r.counterexample->matrices) ms.push_back(to_json(m));
    ce["matrices"] = std::move(ms);
    json cs = json::array();
    for (const auto& c : r.counterexample->coeffs) cs.push_back(to_json(c));
    ce["coeffs"] = std::move(cs);
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json to_json(const GenerationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"invariant", e.invariant.to_string()},
                       {"verdict", e.expressible ? "expressible" : "inconclusive at this bound"}});
  return {{"flavor", to_string(r.flavor)},
          {"n", r.n},
          {"degree_bound", r.degree_bound},
          {"candidate_products", r.candidate_products},
          {"inconclusive", r.inconclusive()},
          {"entries", entries}};
}

namespace {
json mpz_list(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}
}  // namespace

json to_json(const SequenceVerdict& v) {
  return {{"injective_f", v.injective_f},   {"composite_zero", v.composite_zero},
          {"exact_middle", v.exact_middle}, {"surjective_g", v.surjective_g},
          {"splits", v.splits},             {"f_invariants", mpz_list(v.f_invariants)},
          {"g_invariants", mpz_list(v.g_invariants)}};
}

json to_json(const LocalizationVerdict& v) {
  return {{"delta_injective", v.delta_injective},
          {"cokernel_torsion_free", v.cokernel_torsion_free},
          {"exact", v.exact},
          {"splits", v.splits},
          {"middle_rank", v.middle_rank},
          {"delta_invariants", mpz_list(v.delta_invariants)}};
}

json to_json(const ClassificationReport& r) {
  json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["classification"] = to_json(r.predicted);
  j["center_dim"] = r.center_dim;
  j["predicted_center_dim"] = r.predicted_center_dim;
  j["dimension"] = r.dimension;
  j["pseudoscalar_square"] = r.pseudoscalar_square ? json(*r.pseudoscalar_square) : json();
  j["transport_target"] = r.transport_target ? json(*r.transport_target) : json();
  j["transport_ok"] = r.transport_ok ? json(*r.transport_ok) : json();
  j["table"] = "standard mod 8 table";
  j["agree"] = r.agree;
  return j;
}

json to_json(const GroupMembership& m) {
  json j;
  j["in_gamma"] = m.in_gamma;
  j["in_even_part"] = m.in_even_part;
  j["preserves_grade_one"] = m.preserves_grade_one;
  j["preserves_form"] = m.preserves_form;
  j["induced_matrix"] = m.induced ? to_json(*m.induced) : json();
  j["induced_det"] = m.induced_det ? to_json(*m.induced_det) : json();
  if (m.spin_witness) {
    json w = json::array();
    for (const auto& v : *m.spin_witness) w.push_back(to_json(v));
    j["spin_witness"] = std::move(w);
  } else {
    j["spin_witness"] = nullptr;
  }
  return j;
}

json error_json(const Error& e) {
  return {{"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}};
}

}  // namespace compalg::io
