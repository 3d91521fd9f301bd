#pragma once

#include "sequences.hpp"
#include "verify.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nara {

struct BFileEntry {
    long long index = 0;
    Int value;
};

// Parsed OEIS b-file: "index value" lines, '#' comments, indices contiguous.
struct BFile {
    std::string sequence_id;
    std::vector<BFileEntry> entries;
    std::string source_path;
};

struct BFileParseError : std::runtime_error {
    BFileParseError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_no(line) {}
    long line_no;
};

struct EmptyOverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BFile parse_bfile(std::istream& in, std::string sequence_id = "",
                  std::string source_path = "");
BFile parse_bfile(const std::string& text, std::string sequence_id = "");
// sequence_id inferred from the file name ("fixtures/A001629.txt").
BFile load_bfile(const std::string& path);

// Canonical text form; comments are not preserved.
std::string serialize_bfile(const BFile& bfile);

// Exact comparison over the overlap, aligning OEIS index i with computed
// index i + offset. Throws EmptyOverlapError when nothing overlaps.
CheckRecord cross_check(const BFile& bfile, const TermVector& computed,
                        long long offset);

}  // namespace nara
