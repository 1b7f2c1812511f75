#pragma once

#include <string>
#include <vector>

namespace reiscfg {

// Executable identity checks. Each one evaluates its left and right sides by
// independent code paths in exact arithmetic and returns equality.
//
//   name                      params     expected behavior
//   ------------------------- ---------- -----------------------------------
//   refl_ksum                 (n)        true for all n >= 1
//   rot_ksum                  (n)        true for all n >= 1
//   rot_binom_ksum            (n)        true for all n >= 1
//   koganov                   (n)        true for all n >= 1 (corrected
//                                        pairing: odd divisors contribute
//                                        2^(n/d)-1, even divisors -1)
//   koganov_printed           (n)        true iff n is odd; FAILS for all
//                                        even n (first at n = 2)
//   koganov_termwise          (n)        true (odd-k terms coincide)
//   type1_binomial            (m,n)      true
//   type2_binomial            (m,n)      true (corrected closed form)
//   type2_binomial_printed    (m,n)      FAILS for even m and for odd m >= 3
//   type2_shift               (m,n)      true (corrected, every m)
//   type2_shift_printed       (m,n)      odd m only; FAILS for m >= 3
//   refl_gap_closed           (n,m)      true (corrected two-term form)
//   refl_gap_closed_printed   (n,m)      FAILS only for even m with even n
//                                        (first failure m=2, n=6)
//   rot_gap_closed            (n,m)      true (corrected index form)
//   rot_gap_closed_printed    (n,m)      FAILS for some (n,m)
//   no_m0_extension           ()         true (the m=0 contradiction pair
//                                        1 vs 3 is reproduced numerically)
//
// Compatibility aliases accepted by check_identity: lemma1 = refl_ksum,
// lemma2 = rot_ksum, lemma3 = type2_binomial, lemma4 = refl_gap_closed,
// lemma4_printed = refl_gap_closed_printed, lemma5 = rot_gap_closed,
// lemma5_printed = rot_gap_closed_printed, remark1 = koganov,
// remark3 = no_m0_extension.
//
// Unknown name or wrong arity -> DomainError.
bool check_identity(const std::string& name, const std::vector<long long>& params);

std::vector<std::string> identity_names();

}  // namespace reiscfg
