#include "oeis.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nara {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

BFile parse_bfile(std::istream& in, std::string sequence_id,
                  std::string source_path) {
    BFile bf;
    bf.sequence_id = std::move(sequence_id);
    bf.source_path = std::move(source_path);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        const std::size_t first = line.find_first_not_of(" \t");
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_tok, value_tok, extra;
        fields >> index_tok >> value_tok;
        if (value_tok.empty() || (fields >> extra))
            throw BFileParseError("malformed b-file line, expected "
                                  "'index value': '" + line + "'",
                                  line_no);
        BFileEntry entry;
        try {
            const Int idx = parse_int(index_tok);
            if (!idx.fits_slong_p())
                throw std::invalid_argument("index out of range");
            entry.index = idx.get_si();
            entry.value = parse_int(value_tok);
        } catch (const std::exception&) {
            throw BFileParseError("malformed b-file line, expected "
                                  "'index value': '" + line + "'",
                                  line_no);
        }
        if (!bf.entries.empty() &&
            entry.index != bf.entries.back().index + 1)
            throw BFileParseError(
                "non-monotonic index " + index_tok + " after " +
                    std::to_string(bf.entries.back().index),
                line_no);
        bf.entries.push_back(std::move(entry));
    }
    return bf;
}

BFile parse_bfile(const std::string& text, std::string sequence_id) {
    std::istringstream in(text);
    return parse_bfile(in, std::move(sequence_id));
}

BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    return parse_bfile(in, std::filesystem::path(path).stem().string(), path);
}

std::string serialize_bfile(const BFile& bfile) {
    std::string out;
    for (const BFileEntry& e : bfile.entries)
        out += std::to_string(e.index) + " " + e.value.get_str() + "\n";
    return out;
}

CheckRecord cross_check(const BFile& bfile, const TermVector& computed,
                        long long offset) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.check_id = "oeis-" +
                   (bfile.sequence_id.empty() ? std::string("bfile")
                                              : bfile.sequence_id);
    rec.params = "offset=" + std::to_string(offset);
    for (const BFileEntry& e : bfile.entries) {
        const long long mapped = e.index + offset;
        if (mapped < static_cast<long long>(computed.start_index) ||
            mapped >= static_cast<long long>(computed.end_index()))
            continue;
        ++rec.cells_checked;
        const Int& got = computed.at(static_cast<std::size_t>(mapped));
        if (got != e.value) {
            rec.pass = false;
            Counterexample ce;
            ce.inputs = "oeis_index=" + std::to_string(e.index) +
                        " computed_index=" + std::to_string(mapped);
            ce.n = e.index;
            ce.lhs = e.value.get_str();
            ce.rhs = got.get_str();
            rec.counterexample = std::move(ce);
            break;
        }
    }
    if (rec.cells_checked == 0)
        throw EmptyOverlapError(
            "cross_check: no overlap between b-file indices and computed "
            "range at offset " + std::to_string(offset));
    rec.elapsed_sec = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return rec;
}

}  // namespace nara
