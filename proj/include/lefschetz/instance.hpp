#pragma once

#include <string>
#include <vector>

#include "lefschetz/poly.hpp"

namespace lefschetz {

// Presentation data: m+1 independent forms of equal degree d in m+1 variables.
// This is the canonical interchange object of the whole tool.
class Instance {
 public:
  Instance(int m, int d, const FieldSpec& field, std::vector<Poly> generators);

  int m() const { return m_; }
  int d() const { return d_; }
  int socle_degree() const { return (m_ + 1) * (d_ - 1); }
  const FieldSpec& field() const { return field_; }
  const std::vector<Poly>& generators() const { return gens_; }

  bool operator==(const Instance& o) const;

  // Canonical structured-text form; round-trips bit-exactly.
  std::string serialize() const;
  static Instance parse_text(const std::string& text);
  static Instance load(const std::string& path);
  void save(const std::string& path) const;

  // FNV-1a digest of the canonical serialization, as fixed-width hex.
  std::string digest() const;

 private:
  void validate() const;
  int m_;
  int d_;
  FieldSpec field_;
  std::vector<Poly> gens_;
};

// The monomial complete intersection (x_0^d, ..., x_m^d).
Instance monomial_instance(int m, int d, const FieldSpec& field);

// Dense uniform generators; regularity is NOT guaranteed (see gen_regular).
Instance random_instance(int m, int d, const FieldSpec& field, Rng& rng);

}  // namespace lefschetz
