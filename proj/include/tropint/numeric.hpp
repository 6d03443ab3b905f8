#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tropint {

// Exact arithmetic carriers. All geometry in this library is exact: integers
// are arbitrary precision, rationals are always kept reduced with positive
// denominator (gmp canonical form).
using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

enum class errc {
  zero_vector,
  not_square,
  rank_deficient,
  insufficient_rank,
  dimension_too_large,
  empty_input,
  dimension_mismatch,
  non_integral_normalized_volume,
  not_transverse,
  non_generic_perturbation,
  non_generic_instance,
  point_not_on_hypersurface,
  unsupported_dimension,
  invalid_codimension,
  parse_error,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// num/den with canonicalization; throws parse_error on zero denominator.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q"; canonicalizes. Throws parse_error on bad syntax
// or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

std::string ivec_str(const IVec& v);
std::string qvec_str(const QVec& v);

QVec to_qvec(const IVec& v);

}  // namespace tropint
