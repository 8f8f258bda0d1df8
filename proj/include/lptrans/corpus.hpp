#pragma once

#include <string>
#include <vector>

#include "lptrans/family.hpp"
#include "lptrans/gfunction.hpp"

namespace lptrans {

/// Test functions read in the variable of `family`'s measure:
///   one     1
///   x       x
///   xc      x − E[x]
///   x2c     x² − E[x²]
///   phi3    φ_3 / ‖φ_3‖
///   smooth  e^{x/2} (e^{−x/2} for Laguerre)
std::vector<NamedFunction> standard_corpus(const FamilySpec& family);

/// The members with zero mean: xc, x2c, phi3.
std::vector<NamedFunction> mean_zero_corpus(const FamilySpec& family);

/// One member by name; throws ParameterError for an unknown name.
NamedFunction corpus_member(const FamilySpec& family, const std::string& name);

}  // namespace lptrans
