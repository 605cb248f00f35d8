#include "rankring/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rankring {

const Extension& Algebra::chain() const {
  if (!is_chain()) throw InvalidParams("operation needs a chain ring, got Z/" + std::to_string(ext.ring().eta()));
  return ext.component(0);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw FormatError("'" + path + "' is empty");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

namespace {

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError("missing field '" + where + key + "'");
  return j.at(key);
}

std::uint64_t need_uint(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw FormatError("field '" + field + "' must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> parse_poly(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw FormatError("field '" + field + "' must be a non-empty array of integers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(need_uint(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Algebra parse_algebra(const Json& j) {
  if (!j.is_object()) throw FormatError("top level must be a JSON object");
  if (j.contains("components")) {
    const Json& comps = j.at("components");
    if (!comps.is_array() || comps.empty()) throw FormatError("field 'components' must be a non-empty array");
    std::uint64_t eta = 1;
    std::vector<std::pair<ChainRing, std::vector<std::uint64_t>>> raw;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string where = "components[" + std::to_string(i) + "].";
      const std::uint64_t p = need_uint(need(comps[i], "p", where), where + "p");
      const int nu = static_cast<int>(need_uint(need(comps[i], "nu", where), where + "nu"));
      ChainRing ring(p, nu);
      raw.emplace_back(ring, parse_poly(need(comps[i], "h", where), where + "h"));
      eta *= ring.modulus();
    }
    PirRing pir = decompose(eta);
    std::vector<Extension> exts;
    for (std::size_t c = 0; c < pir.size(); ++c) {
      auto it = std::find_if(raw.begin(), raw.end(), [&](const auto& e) { return e.first == pir.component(c); });
      if (it == raw.end()) throw FormatError("field 'components': primes must be distinct");
      exts.emplace_back(it->first, it->second);
    }
    return Algebra{PirExtension(std::move(pir), std::move(exts)), Json{{"components", comps}}};
  }
  const Json& ring = need(j, "ring", "");
  std::uint64_t eta = 0;
  if (ring.contains("eta")) {
    eta = need_uint(ring.at("eta"), "ring.eta");
  } else {
    const std::uint64_t p = need_uint(need(ring, "p", "ring."), "ring.p");
    const int nu = static_cast<int>(need_uint(need(ring, "nu", "ring."), "ring.nu"));
    eta = ChainRing(p, nu).modulus();
  }
  const auto h = parse_poly(need(j, "h", ""), "h");
  return Algebra{PirExtension(decompose(eta), h), Json{{"ring", ring}, {"h", h}}};
}

Json algebra_json(const Algebra& a) { return a.ring_json; }

ExtElem parse_elem(const Json& j, int m, std::uint64_t modulus, const std::string& field) {
  ExtElem x{std::vector<std::uint64_t>(m, 0)};
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    const auto mod = static_cast<std::int64_t>(modulus);
    x.coeffs[0] = static_cast<std::uint64_t>(((v % mod) + mod) % mod);
    return x;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw FormatError("field '" + field + "' must be an array of " + std::to_string(m) + " integers");
  for (int i = 0; i < m; ++i) x.coeffs[i] = need_uint(j[i], field + "[" + std::to_string(i) + "]") % modulus;
  return x;
}

std::vector<ExtElem> parse_vector(const Json& j, int m, std::uint64_t modulus, const std::string& field) {
  if (!j.is_array()) throw FormatError("field '" + field + "' must be an array");
  std::vector<ExtElem> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_elem(j[i], m, modulus, field + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix<ExtElem> parse_matrix(const Json& j, int m, std::uint64_t modulus, const std::string& field) {
  if (!j.is_array()) throw FormatError("field '" + field + "' must be an array of rows");
  Matrix<ExtElem> a;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    auto row = parse_vector(j[i], m, modulus, where);
    if (i > 0 && row.size() != a.cols()) throw FormatError("field '" + where + "' has the wrong length");
    a.append_row(row);
  }
  return a;
}

Json elem_json(const ExtElem& x) { return Json(x.coeffs); }

Json vector_json(const std::vector<ExtElem>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(elem_json(x));
  return out;
}

Json matrix_json(const Matrix<ExtElem>& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(vector_json(a.row(i)));
  return out;
}

CodeSpec parse_code(const Json& j) {
  Algebra alg = parse_algebra(j);
  const int m = alg.ext.degree();
  const std::uint64_t eta = alg.ext.ring().eta();
  Matrix<ExtElem> g = parse_matrix(need(j, "gens", ""), m, eta, "gens");
  int n = static_cast<int>(g.cols());
  if (j.contains("n")) {
    n = static_cast<int>(need_uint(j.at("n"), "n"));
    if (g.rows() > 0 && static_cast<int>(g.cols()) != n) throw FormatError("field 'n' disagrees with the length of 'gens' rows");
    if (g.rows() == 0) g = Matrix<ExtElem>(0, n, alg.ext.component(0).zero());
  }
  return CodeSpec{std::move(alg), std::move(g), n};
}

Json code_json(const CodeSpec& c) {
  Json out = algebra_json(c.algebra);
  out["n"] = c.n;
  out["gens"] = matrix_json(c.gens);
  return out;
}

CodeSpec load_code(const std::string& path) { return parse_code(read_json_file(path)); }

std::vector<RsdInstance> InstanceSpec::components() const {
  std::vector<RsdInstance> out;
  for (std::size_t c = 0; c < algebra.ext.size(); ++c)
    out.push_back(RsdInstance{algebra.ext.component(c), algebra.ext.phi(H, c), algebra.ext.phi(s, c), r, t});
  return out;
}

InstanceSpec parse_instance(const Json& j) {
  InstanceSpec inst{parse_algebra(j), std::nullopt, {}, {}, std::nullopt, 0, std::nullopt};
  const auto& ext = inst.algebra.ext;
  const int m = ext.degree();
  const std::uint64_t eta = ext.ring().eta();
  inst.H = parse_matrix(need(j, "H", ""), m, eta, "H");
  if (inst.H.rows() == 0) throw FormatError("field 'H' has no rows");
  if (j.contains("gens")) inst.gens = parse_matrix(j.at("gens"), m, eta, "gens");
  if (j.contains("y")) inst.y = parse_vector(j.at("y"), m, eta, "y");
  inst.r = static_cast<int>(need_uint(need(j, "r", ""), "r"));
  if (j.contains("t")) inst.t = static_cast<int>(need_uint(j.at("t"), "t"));

  const std::size_t n = inst.H.cols();
  if (inst.y && inst.y->size() != n) throw FormatError("field 'y' must have length n");
  if (inst.gens && inst.gens->rows() > 0 && inst.gens->cols() != n) throw FormatError("field 'gens' rows must have length n");

  // Per component: H free of full row rank; with generators, ker H is then a
  // free module of rank k containing C, i.e. an envelope of C.
  std::vector<std::vector<ExtElem>> s_parts;
  for (std::size_t c = 0; c < ext.size(); ++c) {
    const Extension& e = ext.component(c);
    const Matrix<ExtElem> hc = ext.phi(inst.H, c);
    const auto sf = smith_normal_form(e, hc, false);
    bool free_rows = sf.rank == hc.rows();
    for (int x : sf.exponents) free_rows = free_rows && x == 0;
    if (!free_rows) throw FormatError("field 'H': rows do not generate a free module of full rank");
    if (inst.gens && inst.gens->rows() > 0) {
      const Matrix<ExtElem> gc = ext.phi(*inst.gens, c);
      const LinearCode code(e, gc);
      const auto prod = multiply(e, gc, hc.transposed());
      if (!std::all_of(prod.data().begin(), prod.data().end(), [&](const ExtElem& x) { return e.is_zero(x); }) ||
          hc.rows() + code.rank() != n)
        throw FormatError("field 'H' is not a parity-check matrix for 'gens' (need G H^T = 0 and rank(H) = n - k)");
    }
    if (inst.y) s_parts.push_back(syndrome(e, ext.phi(*inst.y, c), hc));
  }
  std::optional<std::vector<ExtElem>> from_y;
  if (inst.y) from_y = ext.phi_inverse(s_parts);
  if (j.contains("s")) {
    inst.s = parse_vector(j.at("s"), m, eta, "s");
    if (inst.s.size() != inst.H.rows()) throw FormatError("field 's' must have one entry per row of H");
    if (from_y && *from_y != inst.s) throw FormatError("field 's' disagrees with y H^T");
  } else if (from_y) {
    inst.s = *from_y;
  } else {
    throw FormatError("missing field 's' (or 'y')");
  }
  return inst;
}

Json instance_json(const InstanceSpec& inst) {
  Json out = algebra_json(inst.algebra);
  out["n"] = inst.H.cols();
  if (inst.gens) out["gens"] = matrix_json(*inst.gens);
  out["H"] = matrix_json(inst.H);
  if (inst.y) out["y"] = vector_json(*inst.y);
  out["s"] = vector_json(inst.s);
  out["r"] = inst.r;
  if (inst.t) out["t"] = *inst.t;
  return out;
}

InstanceSpec load_instance(const std::string& path) { return parse_instance(read_json_file(path)); }

std::string format_elem(const ExtElem& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(x.coeffs.size()) - 1; i >= 0; --i) {
    const std::uint64_t c = x.coeffs[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'a';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string format_vector(const std::vector<ExtElem>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_elem(v[i]);
  return out + ")";
}

}  // namespace rankring
