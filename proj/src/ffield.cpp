#include "hecke/ffield.hpp"

#include <cstdlib>
#include <sstream>

namespace hecke {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // low degree first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1;
  for (unsigned e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly unpack(std::uint64_t v, unsigned p, unsigned len) {
  Poly c(len);
  for (unsigned i = 0; i < len; ++i, v /= p) c[i] = static_cast<unsigned>(v % p);
  return c;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

unsigned field_cap_from_env() {
  if (const char* s = std::getenv("HECKE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v >= 2) return static_cast<unsigned>(v);
  }
  return kDefaultFieldCap;
}

bool is_irreducible(const Poly& poly_in, unsigned p) {
  Poly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(poly.size() - 1);
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly f = unpack(v, p, d);
      f.push_back(1);
      if (poly_mod(poly, f, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned k) {
  if (k == 1) return {0, 1};
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly f = unpack(v, p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::NoRoot, "no irreducible polynomial found");
}

Field Field::make(unsigned p, unsigned k, unsigned cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > 8) throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(k));
  const std::uint64_t q = ipow(p, k);
  if (q > cap)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<unsigned>(q);
  impl->modulus = smallest_irreducible(p, k);

  const unsigned n = impl->q;
  std::vector<Poly> el(n);
  for (unsigned v = 0; v < n; ++v) el[v] = unpack(v, p, k);
  auto pack = [&](const Poly& c) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  };

  impl->add.resize(std::size_t(n) * n);
  impl->mul.resize(std::size_t(n) * n);
  impl->neg.resize(n);
  impl->inv.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    Poly ng(k);
    for (unsigned i = 0; i < k; ++i) ng[i] = (p - el[a][i]) % p;
    impl->neg[a] = pack(ng);
    for (unsigned b = 0; b < n; ++b) {
      Poly s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (el[a][i] + el[b][i]) % p;
      impl->add[a * n + b] = pack(s);
      Poly prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + el[a][i] * el[b][j]) % p;
      Poly r = k == 1 ? Poly{prod[0]} : poly_mod(prod, impl->modulus, p);
      r.resize(k, 0);
      impl->mul[a * n + b] = pack(r);
    }
  }
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b)
      if (impl->mul[a * n + b] == 1) {
        impl->inv[a] = b;
        break;
      }
  return Field(std::move(impl));
}

FieldElem Field::from_int(long n) const {
  const long p = impl_->p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElem Field::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() > impl_->k) throw Error(ErrorCode::FieldMismatch, "too many coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= impl_->p) throw Error(ErrorCode::FieldMismatch, "coefficient not reduced mod p");
    v = v * impl_->p + c[i];
  }
  return {v};
}

std::vector<unsigned> Field::coeffs(FieldElem a) const { return unpack(a.value, impl_->p, impl_->k); }

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out(impl_->q);
  for (unsigned v = 0; v < impl_->q; ++v) out[v] = {v};
  return out;
}

FieldElem Field::inv(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero");
  return {impl_->inv[a.value]};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem r = one();
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

std::string Field::to_string(FieldElem a) const {
  if (impl_->k == 1) return std::to_string(a.value);
  // polynomial in t, highest degree first
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

FieldElem Embedding::operator()(FieldElem a) const {
  if (!src.contains(a)) throw Error(ErrorCode::FieldMismatch, "element not in source field");
  return table[a.value];
}

bool Embedding::in_image(FieldElem a) const { return dst.contains(a) && back_table[a.value] >= 0; }

FieldElem Embedding::preimage(FieldElem a) const {
  if (!in_image(a)) throw Error(ErrorCode::FieldMismatch, "element not in embedded subfield");
  return {static_cast<std::uint32_t>(back_table[a.value])};
}

Embedding embed_subfield(const Field& src, const Field& dst) {
  if (src.characteristic() != dst.characteristic() || dst.degree() != 2 * src.degree())
    throw Error(ErrorCode::NotQuadraticExtension, "destination is not the quadratic extension");
  const auto& mod = src.modulus();

  // Image of the prime field is forced; the generator goes to the smallest root of mod.
  auto eval_mod = [&](FieldElem r) {
    FieldElem acc = dst.zero();
    for (std::size_t i = mod.size(); i-- > 0;) acc = dst.add(dst.mul(acc, r), dst.from_int(mod[i]));
    return acc;
  };
  FieldElem g{};
  bool found = false;
  for (FieldElem r : dst.elements())
    if (eval_mod(r) == dst.zero()) {
      g = r;
      found = true;
      break;
    }
  if (!found) throw Error(ErrorCode::NoRoot, "source modulus has no root in destination");

  Embedding e{src, dst, g, {}, {}};
  e.table.resize(src.order());
  e.back_table.assign(dst.order(), -1);
  for (FieldElem a : src.elements()) {
    const auto c = src.coeffs(a);
    FieldElem img = dst.zero();
    for (std::size_t i = c.size(); i-- > 0;) img = dst.add(dst.mul(img, g), dst.from_int(c[i]));
    e.table[a.value] = img;
    e.back_table[img.value] = static_cast<std::int32_t>(a.value);
  }
  return e;
}

FieldElem frobenius_map(const Field& ext, FieldElem e, const Field& base) {
  if (ext.characteristic() != base.characteristic() || ext.degree() % base.degree() != 0 ||
      !ext.contains(e))
    throw Error(ErrorCode::FieldMismatch, "element does not live over the base field");
  return ext.pow(e, base.order());
}

}  // namespace hecke
