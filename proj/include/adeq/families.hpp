#pragma once

#include <string>
#include <vector>

#include "adeq/semigroup.hpp"

namespace adeq {

// Standard tables for the built-in families.  Parameters outside the
// supported ranges raise ParamOutOfRangeError.
FiniteSemigroup semilattice_chain(int k);     // meet = min on a k-chain
FiniteSemigroup rectangular_band(int m, int k);
FiniteSemigroup left_zero(int m);
FiniteSemigroup right_zero(int k);
FiniteSemigroup cyclic_group(int k);
FiniteSemigroup monogenic(int index, int period);
FiniteSemigroup full_transformation_monoid(int n);  // n <= 3
FiniteSemigroup symmetric_inverse_monoid(int n);    // n <= 2
FiniteSemigroup brandt_b2();
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

// Dispatch by family name, e.g. generate("rectangular_band", {2, 3}).
FiniteSemigroup generate(const std::string& family,
                         const std::vector<int>& params);

}  // namespace adeq
