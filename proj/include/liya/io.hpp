#ifndef LIYA_IO_HPP
#define LIYA_IO_HPP

#include <string>
#include <variant>

#include "liya/bialgebra.hpp"
#include "liya/pre_ly.hpp"

namespace liya {

/// Operator together with the representation it acts against (T : V -> g).
struct OperatorInput {
  Representation rep;
  Mat matrix;
};

/// Quadratic algebra with optional subspace bases for Manin checks.
struct ManinInput {
  QuadraticLY quad;
  std::vector<std::vector<Rational>> basis1, basis2;
};

using ParsedInput =
    std::variant<LYAlgebra, Representation, TwoTensor, Cobracket, PreLYAlgebra, OperatorInput,
                 MatchedPairData, ManinInput>;

/// Reads one of the JSON input formats, dispatching on the keys present.
/// Indices in files are 1-based; rationals are "p" or "p/q" strings. Skew
/// redundancy may be omitted: the loader completes missing mirror entries.
/// Throws std::runtime_error with a descriptive message on malformed input.
ParsedInput parse_input(const std::string& path);
ParsedInput parse_input_text(const std::string& text, const std::string& dir);

std::string kind_of(const ParsedInput& p);

std::string serialize(const LYAlgebra& alg, const std::string& description = "");
std::string serialize(const TwoTensor& r, const std::string& description = "");
std::string serialize(const Cobracket& c, const std::string& description = "");
std::string serialize(const PreLYAlgebra& a, const std::string& description = "");
std::string serialize(const ManinInput& m, const std::string& description = "");

} // namespace liya

#endif
