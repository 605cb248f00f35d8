#include "rankring/extension.hpp"

#include <sstream>

#include "rankring/fp_poly.hpp"

namespace rankring {

Extension::Extension(const ChainRing& base, std::vector<std::uint64_t> h)
    : base_(base), h_(std::move(h)), m_(0), residue_size_(1) {
  for (auto& c : h_) c = base_.reduce(c);
  if (h_.size() < 2) throw NotMonic("h must have degree >= 1");
  if (h_.back() != base_.one()) throw NotMonic("leading coefficient of h must be 1");
  m_ = static_cast<int>(h_.size()) - 1;

  const auto check = fp::check_irreducible(fp::reduce(h_, base_.p()), base_.p());
  if (!check.irreducible) {
    std::ostringstream msg;
    msg << "Psi(h) is reducible over F_" << base_.p();
    if (!check.factor.empty()) {
      msg << " (factor:";
      for (auto c : check.factor) msg << ' ' << c;
      msg << ')';
    }
    throw ReducibleResidue(msg.str(), check.factor);
  }

  residue_size_ = checked_power(base_.p(), m_);

  // Powers X^m, ..., X^(2m-2) reduced mod h, built by repeated shifting.
  std::vector<std::uint64_t> cur(m_);
  for (int j = 0; j < m_; ++j) cur[j] = base_.neg(h_[j]);
  for (int i = 0; i + 1 < m_; ++i) {
    reduction_.push_back(cur);
    std::vector<std::uint64_t> next(m_, 0);
    const std::uint64_t top = cur[m_ - 1];
    for (int j = m_ - 1; j > 0; --j) next[j] = cur[j - 1];
    for (int j = 0; j < m_; ++j) next[j] = base_.sub(next[j], base_.mul(top, h_[j]));
    cur = std::move(next);
  }

  if (base_.nu() > 1) {
    residue_ = std::make_shared<const Extension>(ChainRing(base_.p(), 1), fp::reduce(h_, base_.p()));
  }
}

ExtElem Extension::one() const {
  Elem x = zero();
  x.coeffs[0] = base_.one();
  return x;
}

ExtElem Extension::generator() const {
  Elem x = zero();
  if (m_ == 1) {
    x.coeffs[0] = base_.neg(h_[0]);
  } else {
    x.coeffs[1] = base_.one();
  }
  return x;
}

ExtElem Extension::generator_power(int i) const {
  if (i < m_) {
    Elem x = zero();
    x.coeffs[i] = base_.one();
    return x;
  }
  Elem x = one();
  const Elem a = generator();
  for (int k = 0; k < i; ++k) x = mul(x, a);
  return x;
}

ExtElem Extension::from_base(std::uint64_t r) const {
  Elem x = zero();
  x.coeffs[0] = base_.reduce(r);
  return x;
}

ExtElem Extension::from_coeffs(std::vector<std::uint64_t> c) const {
  if (static_cast<int>(c.size()) != m_) throw DimensionMismatch("extension element needs m coordinates");
  for (auto& v : c) v = base_.reduce(v);
  return ExtElem{std::move(c)};
}

bool Extension::is_zero(const Elem& x) const {
  for (auto c : x.coeffs)
    if (c != 0) return false;
  return true;
}

ExtElem Extension::add(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = base_.add(x.coeffs[i], y.coeffs[i]);
  return r;
}

ExtElem Extension::sub(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (int i = 0; i < m_; ++i) r.coeffs[i] = base_.sub(x.coeffs[i], y.coeffs[i]);
  return r;
}

ExtElem Extension::neg(const Elem& x) const {
  Elem r = x;
  for (auto& c : r.coeffs) c = base_.neg(c);
  return r;
}

ExtElem Extension::scalar_mul(std::uint64_t r, const Elem& x) const {
  Elem out = x;
  for (auto& c : out.coeffs) c = base_.mul(r, c);
  return out;
}

ExtElem Extension::mul(const Elem& x, const Elem& y) const {
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(x.coeffs[i], y.coeffs[j]));
  }
  Elem r{std::vector<std::uint64_t>(prod.begin(), prod.begin() + m_)};
  for (int i = 0; i + 1 < m_; ++i) {
    const std::uint64_t c = prod[m_ + i];
    if (c == 0) continue;
    for (int j = 0; j < m_; ++j) r.coeffs[j] = base_.add(r.coeffs[j], base_.mul(c, reduction_[i][j]));
  }
  return r;
}

int Extension::valuation(const Elem& x) const {
  int v = base_.nu();
  for (auto c : x.coeffs) v = std::min(v, base_.valuation(c));
  return v;
}

ExtElem Extension::unit_part(const Elem& x) const {
  if (is_zero(x)) return one();
  return shift_down(x, valuation(x));
}

ExtElem Extension::shift_down(const Elem& x, int k) const {
  Elem r = x;
  for (auto& c : r.coeffs) c = base_.shift_down(c, k);
  return r;
}

ExtElem Extension::mul_pi_power(const Elem& x, int k) const { return scalar_mul(base_.pi_power(k), x); }

ExtElem Extension::psi(const Elem& x) const {
  Elem r = x;
  for (auto& c : r.coeffs) c = base_.residue(c);
  return r;
}

ExtElem Extension::lift(const Elem& y) const {
  if (static_cast<int>(y.coeffs.size()) != m_) throw DimensionMismatch("residue element needs m coordinates");
  Elem r = y;
  for (auto& c : r.coeffs) c %= base_.p();
  return r;
}

ExtElem Extension::invert(const Elem& x) const {
  const std::uint64_t p = base_.p();
  fp::Poly px = fp::reduce(psi(x).coeffs, p);
  if (px.empty()) throw NotAUnit(to_string(x) + " lies in the maximal ideal");
  auto inv = fp::inverse_mod(px, fp::reduce(h_, p), p);
  if (!inv) throw NotAUnit(to_string(x));
  Elem y = zero();
  for (std::size_t i = 0; i < inv->size(); ++i) y.coeffs[i] = (*inv)[i];
  // Newton-Hensel: precision doubles each step, so ceil(log2 nu) steps suffice.
  const Elem two = from_base(2);
  for (int prec = 1; prec < base_.nu(); prec *= 2) y = mul(y, sub(two, mul(x, y)));
  return y;
}

std::uint64_t Extension::residue_class_count(int k) const {
  std::uint64_t per = base_.residue_class_count(k);
  std::uint64_t r = 1;
  for (int i = 0; i < m_; ++i) {
    if (per != 0 && r > (std::uint64_t{1} << 62) / per) throw TooLarge("residue class count overflows");
    r *= per;
  }
  return r;
}

ExtElem Extension::residue_class_rep(int k, std::uint64_t idx) const {
  const std::uint64_t per = base_.residue_class_count(k);
  Elem x = zero();
  for (int i = 0; i < m_; ++i) {
    x.coeffs[i] = idx % per;
    idx /= per;
  }
  return x;
}

std::string Extension::to_string(const Elem& x) const {
  std::ostringstream os;
  bool first = true;
  for (int i = m_ - 1; i >= 0; --i) {
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

Matrix<std::uint64_t> Extension::matrix_representation(const std::vector<Elem>& v) const {
  Matrix<std::uint64_t> a(m_, v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i < m_; ++i) a(i, j) = v[j].coeffs[i];
  return a;
}

std::vector<ExtElem> Extension::from_matrix_representation(const Matrix<std::uint64_t>& a) const {
  if (static_cast<int>(a.rows()) != m_) throw DimensionMismatch("matrix representation needs m rows");
  std::vector<Elem> v;
  v.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(from_coeffs(a.col(j)));
  return v;
}

Extension default_extension(std::uint64_t p, int nu, int m) {
  ChainRing base(p, nu);
  return Extension(base, fp::smallest_irreducible(m, p));
}

std::vector<ExtElem> psi(const Extension& ext, const std::vector<ExtElem>& v) {
  std::vector<ExtElem> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ext.psi(x));
  return out;
}

std::vector<ExtElem> lift(const Extension& ext, const std::vector<ExtElem>& v) {
  std::vector<ExtElem> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ext.lift(x));
  return out;
}

}  // namespace rankring
