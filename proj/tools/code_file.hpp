#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gwht/bigint.hpp"
#include "gwht/code.hpp"

namespace gwht::cli {

enum class MatrixKind { generator, parity };

// Plain-text code description:
//
//   # comment
//   q 3
//   n 6
//   k 3
//   matrix parity
//   0 0 2 1 0 0
//   ...
//
// plus an optional `modulus c0 c1 ... cl` line for composite q.
LinearCode parse_code_file(std::string_view text);

/// Emits whichever matrix the code was built from (the generator if both).
std::string format_code_file(const LinearCode& code);
std::string format_code_file(const LinearCode& code, MatrixKind kind);

// A function on GF(q)^s for the `transform` subcommand:
//
//   q 3
//   s 2
//   domain full        # or: reduced
//   1 2 2 3 4 5 3 5 4
//
// `full` lists q^s integers in lexicographic order of the argument (leftmost
// coordinate most significant); `reduced` lists the value at 0 followed by
// one value per projective point in table order.
struct FunctionFile {
  Field field;
  unsigned arity = 0;
  bool reduced = false;
  std::vector<BigInt> values;
};

FunctionFile parse_function_file(std::string_view text);

}  // namespace gwht::cli
