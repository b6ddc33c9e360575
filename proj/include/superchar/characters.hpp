#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "superchar/diagrams.hpp"
#include "superchar/pdc.hpp"
#include "superchar/series.hpp"

namespace superchar {

// e^rho R ch L(lambda) as a sum over P_lambda of signed path counts times
// F_W(e^{mu^rho}); exact on (lambda^rho - Q+) up to max_height.
CharacterSeries path_side(const ShiftedWeight& lambda_rho, long max_height);

// The same series from the closed one-term formula; PDC weights only.  Every
// coefficient must come out an integer after division by t_lambda.
CharacterSeries pdc_side(const ShiftedWeight& lambda_rho, long max_height);

struct SimpleCharacter {
  CharacterSeries ch;
  bool complete = false;    // an empty height shell below the cut caps the support
  std::int64_t dim = 0;     // sum of coefficients, meaningful when complete
  long support_height = 0;  // deepest occupied shell
  bool weyl_invariant = false;
  bool nonnegative = false;
};

// ch L(lambda) = path_side * (e^rho R)^{-1}, base lambda.
SimpleCharacter simple_character(const ShiftedWeight& lambda_rho, long max_height);

struct VerificationReport {
  ShiftedWeight lambda = ShiftedWeight::zero({1, 1});
  ClassificationFlags flags;
  long max_height = 0;
  long compared = 0;
  std::vector<std::tuple<ShiftedWeight, std::int64_t, std::int64_t>> mismatches;
  std::int64_t t_lambda = 1;
  long up_norm = 0;
  int r = 0;

  bool verified() const { return mismatches.empty(); }
};

// Term-by-term comparison of path_side and pdc_side on the exact window,
// plus spot checks of both exact coefficient extractors at sampled weights.
VerificationReport verify_main_theorem(const ShiftedWeight& lambda_rho, long max_height,
                                       int extractor_samples = 20);

namespace detail {

struct RawClosedForm {
  CharacterSeries sum;  // sign prefactor applied, division by t_lambda not yet done
  std::int64_t t_lambda = 1;
  long up_norm = 0;
};

// The closed formula evaluated mechanically with no PDC check and no
// division; lets tests exhibit the coefficientwise failure on non-PDC input.
RawClosedForm closed_form_raw(const ShiftedWeight& lambda_rho, long max_height);

}  // namespace detail

}  // namespace superchar
