#include "lrc/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace lrc {

namespace {

// Reads the next content line (comments stripped, blank lines skipped).
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        return true;
    }
    return false;
}

// Parses "key=value" pairs from "name key=value key=value ...".
std::uint64_t field_value(const std::string& line, const std::string& key, int lineno) {
    const std::string tag = key + "=";
    auto pos = line.find(tag);
    if (pos == std::string::npos) throw ParseError("missing '" + key + "='", lineno);
    char* end = nullptr;
    const char* s = line.c_str() + pos + tag.size();
    std::uint64_t v = std::strtoull(s, &end, 10);
    if (end == s) throw ParseError("bad value for '" + key + "'", lineno);
    return v;
}

std::vector<std::uint32_t> csv_values(const std::string& line, const std::string& key,
                                      int lineno) {
    const std::string tag = key + "=";
    auto pos = line.find(tag);
    if (pos == std::string::npos) throw ParseError("missing '" + key + "='", lineno);
    std::vector<std::uint32_t> out;
    const char* s = line.c_str() + pos + tag.size();
    while (true) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(s, &end, 10);
        if (end == s) throw ParseError("bad list for '" + key + "'", lineno);
        out.push_back(static_cast<std::uint32_t>(v));
        s = end;
        if (*s != ',') break;
        ++s;
    }
    return out;
}

}  // namespace

LinearCode parse_code(std::istream& in) {
    int lineno = 0;
    std::string line;

    if (!next_line(in, line, lineno)) throw ParseError("missing field header", lineno + 1);
    if (line.rfind("field", 0) != 0) throw ParseError("expected 'field ...' header", lineno);
    const auto q = field_value(line, "q", lineno);
    const auto p = field_value(line, "p", lineno);
    const auto m = field_value(line, "m", lineno);
    const auto primpoly = csv_values(line, "primpoly", lineno);
    std::uint64_t pm = 1;
    for (std::uint64_t i = 0; i < m; ++i) pm *= p;
    if (pm != q) throw FieldError("q != p^m in field header", lineno);
    FieldPtr field;
    try {
        field = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m),
                            primpoly);
    } catch (const Error& e) {
        throw FieldError(std::string("bad field: ") + e.what(), lineno);
    }

    if (!next_line(in, line, lineno)) throw ParseError("missing code header", lineno + 1);
    if (line.rfind("code", 0) != 0) throw ParseError("expected 'code ...' header", lineno);
    const int n = static_cast<int>(field_value(line, "n", lineno));
    const int k = static_cast<int>(field_value(line, "k", lineno));
    if (n < 1 || k < 1 || k > n) throw ParseError("need 1 <= k <= n", lineno);

    if (!next_line(in, line, lineno)) throw ParseError("missing matrix kind", lineno + 1);
    if (line != "G" && line != "H") throw ParseError("matrix kind must be 'G' or 'H'", lineno);
    const char kind = line[0];
    const int rows = kind == 'G' ? k : n - k;
    if (rows < 1) throw ParseError("H-kind file needs k < n", lineno);

    Matrix M(rows, n);
    for (int r = 0; r < rows; ++r) {
        if (!next_line(in, line, lineno))
            throw ParseError("expected " + std::to_string(rows) + " matrix rows", lineno + 1);
        std::istringstream row(line);
        for (int c = 0; c < n; ++c) {
            std::uint64_t v;
            if (!(row >> v)) throw ParseError("row needs " + std::to_string(n) + " entries", lineno);
            if (v >= field->q())
                throw ParseError("entry " + std::to_string(v) + " outside field of size " +
                                 std::to_string(field->q()), lineno);
            M(r, c) = static_cast<Elem>(v);
        }
        std::uint64_t extra;
        if (row >> extra) throw ParseError("row has more than n entries", lineno);
    }
    if (next_line(in, line, lineno)) throw ParseError("trailing content after matrix", lineno);

    LinearCode built = [&] {
        try {
            return LinearCode::from_generator(field, M);
        } catch (const DegenerateCode&) {
            throw;
        } catch (const ZeroMatrix& e) {
            throw RankError(std::string("matrix is singular: ") + e.what(), lineno);
        }
    }();
    if (built.k() != rows)
        throw RankError("matrix rank " + std::to_string(built.k()) + " != declared row count " +
                        std::to_string(rows), lineno);
    LinearCode C = kind == 'G' ? built : built.dual();
    if (C.k() != k)
        throw RankError("code dimension " + std::to_string(C.k()) + " != declared k = " +
                        std::to_string(k), lineno);
    for (int c = 0; c < C.n(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < C.G().rows() && zero; ++r) zero = (C.G()(r, c) == 0);
        if (zero)
            throw DegenerateCode("coordinate " + std::to_string(c + 1) +
                                 " is zero in every codeword");
    }
    return C;
}

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_code(in);
}

void print_code(std::ostream& os, const LinearCode& C, char kind) {
    const auto& f = *C.field();
    os << "field q=" << f.q() << " p=" << f.p() << " m=" << f.m() << " primpoly=";
    for (std::size_t i = 0; i < f.primpoly().size(); ++i) {
        if (i) os << ',';
        os << f.primpoly()[i];
    }
    os << "\ncode n=" << C.n() << " k=" << C.k() << '\n';
    const Matrix& M = kind == 'G' ? C.G() : C.H();
    os << kind << '\n';
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c) os << ' ';
            os << M(r, c);
        }
        os << '\n';
    }
}

MaskedVec parse_masked_word(const std::string& text, const FieldPtr& field, int n) {
    MaskedVec out{field, {}, {}};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        // trim
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.erase(0, 1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
        if (tok == "?") {
            out.entries.push_back(0);
            out.erased.push_back(1);
        } else {
            char* end = nullptr;
            std::uint64_t v = std::strtoull(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0')
                throw Error("bad word entry '" + tok + "'");
            if (v >= field->q()) throw Error("entry " + tok + " outside the field");
            out.entries.push_back(static_cast<Elem>(v));
            out.erased.push_back(0);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(out.entries.size()) != n)
        throw LengthMismatch("word has " + std::to_string(out.entries.size()) +
                             " entries, code length is " + std::to_string(n));
    return out;
}

void print_structure(std::ostream& os, const RecoveryStructure& S, bool optimal) {
    for (int i = 1; i <= S.n(); ++i) {
        os << "i=" << i << " loc=" << S.loc(i) << " R=";
        const auto& R = S.set(i);
        for (std::size_t j = 0; j < R.size(); ++j) {
            if (j) os << ',';
            os << R[j];
        }
        os << " w=";
        const auto& w = S.word(i).entries;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (j) os << ' ';
            os << w[j];
        }
        os << '\n';
    }
    os << "summary loc=" << S.locality() << " dual_distance=" << S.dual_distance()
       << " optimal=" << (optimal ? "yes" : "no") << '\n';
}

}  // namespace lrc
