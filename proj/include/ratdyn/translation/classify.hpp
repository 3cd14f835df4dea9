#pragma once

#include <string_view>

#include "ratdyn/dynsys/degree_profile.hpp"
#include "ratdyn/dynsys/dynamical_system.hpp"

namespace ratdyn {

enum class RecognizedClass { affine, mobius_product, monomial, unrecognized };
enum class Verdict { translational_proven, translational_candidate, not_translational_evidence };

std::string_view to_string(RecognizedClass c) noexcept;
std::string_view to_string(Verdict v) noexcept;

struct TranslationEvidence {
  DegreeProfile profile;
  RecognizedClass recognized_class = RecognizedClass::unrecognized;
  Verdict verdict = Verdict::translational_candidate;
};

/// First match of: every coordinate of degree <= 1; coordinate i a Moebius
/// function of x_i alone; every coordinate a monomial with coefficient 1.
RecognizedClass recognize(const DynamicalSystem& sys);

/// Proven for affine and Moebius products and for monomial maps of finite
/// order; otherwise evidence from the degree sequence of length `window`.
TranslationEvidence classify_system(const DynamicalSystem& sys, unsigned window = 6);

}  // namespace ratdyn
