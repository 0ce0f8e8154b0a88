#pragma once

#include "eiscoh/field.hpp"

#include <functional>
#include <string>

namespace eiscoh {

// Acceptance threshold for recognized values.
constexpr double kRecognitionThreshold = 1e-20;

enum class RecognitionKind { Rational, QuadElem, Failed };

struct RecognitionResult {
  RecognitionKind kind = RecognitionKind::Failed;
  Rat rational;
  QuadElem element;
  Real residual;
  Int height;
  bool ok() const { return kind != RecognitionKind::Failed; }
  std::string str() const;
};

RecognitionResult recognize_rational(const Complex& x, const Int& max_den, const PrecisionContext& ctx,
                                     double threshold = kRecognitionThreshold);
// Rounds x in the basis {1, omega} of O.
RecognitionResult recognize_in_O(const Complex& x, long d, const Int& height_bound, const PrecisionContext& ctx,
                                 double threshold = kRecognitionThreshold);

bool same_recognition(const RecognitionResult& a, const RecognitionResult& b);

// Recognize f(ctx), then require the same answer from f at twice the precision.
using ValueAt = std::function<Complex(const PrecisionContext&)>;
RecognitionResult recognize_rational_stable(const ValueAt& f, const Int& max_den, const PrecisionContext& ctx);
RecognitionResult recognize_in_O_stable(const ValueAt& f, long d, const Int& height_bound, const PrecisionContext& ctx);

}  // namespace eiscoh
