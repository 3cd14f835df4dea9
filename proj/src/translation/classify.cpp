#include "ratdyn/translation/classify.hpp"

#include "ratdyn/translation/exponent_matrix.hpp"

namespace ratdyn {

std::string_view to_string(RecognizedClass c) noexcept {
  switch (c) {
    case RecognizedClass::affine: return "affine";
    case RecognizedClass::mobius_product: return "mobius-product";
    case RecognizedClass::monomial: return "monomial";
    case RecognizedClass::unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::translational_proven: return "translational-proven";
    case Verdict::translational_candidate: return "translational-candidate";
    case Verdict::not_translational_evidence: return "not-translational-evidence";
  }
  return "translational-candidate";
}

namespace {

bool only_variable(const Polynomial& p, std::size_t var) {
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (v != var && p.uses_variable(v)) return false;
  }
  return true;
}

bool is_affine(const RationalFunction& f) { return f.is_polynomial() && f.num().total_degree() <= 1; }

bool is_own_mobius(const RationalFunction& f, std::size_t var) {
  if (!only_variable(f.num(), var) || !only_variable(f.den(), var)) return false;
  if (f.num().total_degree() > 1 || f.den().total_degree() > 1) return false;
  // Coprime numerator and denominator of degree <= 1 give ad - bc != 0
  // unless the function is constant.
  return !f.is_constant();
}

}  // namespace

RecognizedClass recognize(const DynamicalSystem& sys) {
  const auto& cs = sys.coords();
  bool affine = true, mobius = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    affine = affine && is_affine(cs[i]);
    mobius = mobius && is_own_mobius(cs[i], i);
  }
  if (affine) return RecognizedClass::affine;
  if (mobius) return RecognizedClass::mobius_product;
  if (ExponentMatrix::from_system(sys)) return RecognizedClass::monomial;
  return RecognizedClass::unrecognized;
}

TranslationEvidence classify_system(const DynamicalSystem& sys, unsigned window) {
  TranslationEvidence ev;
  ev.recognized_class = recognize(sys);
  ev.profile = degree_sequence(sys, window);
  bool proven = ev.recognized_class == RecognizedClass::affine ||
                ev.recognized_class == RecognizedClass::mobius_product;
  if (ev.recognized_class == RecognizedClass::monomial) {
    proven = ExponentMatrix::from_system(sys)->multiplicative_order().has_value();
  }
  if (proven) {
    ev.verdict = Verdict::translational_proven;
  } else if (ev.profile.growth_class == GrowthClass::exponential_suspected) {
    ev.verdict = Verdict::not_translational_evidence;
  } else {
    ev.verdict = Verdict::translational_candidate;
  }
  return ev;
}

}  // namespace ratdyn
