#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

inline constexpr unsigned kDefaultFieldCap = 128;

// Reads HECKE_CAP from the environment, falling back to kDefaultFieldCap.
unsigned field_cap_from_env();

// An element is its coefficient vector packed base p: sum c_i p^i.
// Comparing packed values is the total order used for canonical representatives.
struct FieldElem {
  std::uint32_t value = 0;
  auto operator<=>(const FieldElem&) const = default;
};

class Field {
 public:
  static Field make(unsigned p, unsigned k, unsigned cap = kDefaultFieldCap);

  unsigned characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->k; }
  unsigned order() const { return impl_->q; }
  // Monic, low degree first, length k+1.
  const std::vector<unsigned>& modulus() const { return impl_->modulus; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(long n) const;
  FieldElem from_coeffs(const std::vector<unsigned>& c) const;
  std::vector<unsigned> coeffs(FieldElem a) const;
  bool contains(FieldElem a) const { return a.value < impl_->q; }
  std::vector<FieldElem> elements() const;

  FieldElem add(FieldElem a, FieldElem b) const { return {impl_->add[a.value * impl_->q + b.value]}; }
  FieldElem mul(FieldElem a, FieldElem b) const { return {impl_->mul[a.value * impl_->q + b.value]}; }
  FieldElem neg(FieldElem a) const { return {impl_->neg[a.value]}; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  std::string to_string(FieldElem a) const;

  bool operator==(const Field& o) const {
    return impl_->p == o.impl_->p && impl_->k == o.impl_->k;
  }

 private:
  struct Impl {
    unsigned p = 0, k = 0, q = 0;
    std::vector<unsigned> modulus;
    std::vector<std::uint32_t> add, mul, neg, inv;
  };
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Smallest monic irreducible of degree k over F_p under the packed order.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k);
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

struct Embedding {
  Field src;
  Field dst;
  FieldElem image_of_generator;
  std::vector<FieldElem> table;          // indexed by src value
  std::vector<std::int32_t> back_table;  // indexed by dst value, -1 off the image

  FieldElem operator()(FieldElem a) const;
  // Inverse on the image; FieldMismatch if a is not in it.
  FieldElem preimage(FieldElem a) const;
  bool in_image(FieldElem a) const;
};

Embedding embed_subfield(const Field& src, const Field& dst);

// e^q with q = |base|; ext must be an extension of base of the same characteristic.
FieldElem frobenius_map(const Field& ext, FieldElem e, const Field& base);

}  // namespace hecke
