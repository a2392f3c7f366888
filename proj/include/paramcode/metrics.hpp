#pragma once

#include <string>
#include <vector>

#include "paramcode/core.hpp"

namespace paramcode {

/// Number of positions where the two words differ.
std::size_t hamming_distance(const Codeword& a, const Codeword& b);

/// hamming_distance / n, exact.
Rational relative_hamming(const Codeword& a, const Codeword& b);

/// Requires at least two words (TooFewWords otherwise).
CodeParameters code_parameters(const Code& code, RateBase base = RateBase::Q);

struct DistanceMatrix {
  std::vector<std::string> labels;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> absolute;
  std::vector<std::vector<Rational>> relative;
};

/// One row/column per codeword, labelled with the codeword label.
DistanceMatrix distance_matrix(const Code& code);

enum class MatrixKind { Absolute, Relative };

/// Labels as header row and first column.
std::string to_csv(const DistanceMatrix& matrix, MatrixKind kind = MatrixKind::Relative);
std::string to_json(const DistanceMatrix& matrix);

/// Distance normalized by the number of parameters set (neither Entailed nor
/// Missing) in both records. Throws NoSharedParameters when there are none.
Rational logua_distance(const LanguageRecord& a, const LanguageRecord& b);

}  // namespace paramcode
