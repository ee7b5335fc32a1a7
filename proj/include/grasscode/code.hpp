#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasscode/subspace.hpp"

namespace grasscode {

struct VerifiedTag {
    enum class Kind { MinDistance, Covering };
    Kind kind;
    unsigned value;  // d for codes, r for coverings
};

/// A duplicate-free, lexicographically sorted set of equal-dimension
/// subspaces of F_q^n, optionally carrying what has been verified about it.
struct SubspaceCode {
    FieldPtr field;
    unsigned n = 0;
    unsigned k = 0;
    std::vector<Subspace> members;  // sorted, unique
    std::optional<VerifiedTag> tag;

    std::size_t size() const { return members.size(); }
};

/// Sorts, checks shape agreement and rejects duplicates.
SubspaceCode make_code(FieldPtr field, unsigned n, unsigned k,
                       std::vector<Subspace> members,
                       std::optional<VerifiedTag> tag = std::nullopt);

// Line-oriented text format, bit-exact:
//   line 1: grasscode v1
//   line 2: q=<int> n=<int> k=<int>      (extensions: q=p^e;modulus=<digits>)
//   then one codeword per line, k row-strings of n base-q digits joined by
//   '|', rows in RREF order, lines sorted lexicographically. '#' starts a
//   comment line.
std::string code_to_string(const SubspaceCode& code,
                           const std::vector<std::string>& comments = {});
void write_code_file(const SubspaceCode& code, const std::string& path,
                     const std::vector<std::string>& comments = {});

// Parses and validates: rejects non-canonical rows, duplicates, wrong
// dimensions, unsorted lines.
SubspaceCode parse_code_string(const std::string& text);
SubspaceCode parse_code_file(const std::string& path);

}  // namespace grasscode
