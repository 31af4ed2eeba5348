#include "nradius/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nradius {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

struct MmHeader {
    bool coordinate = false;
    enum Field { Real, Complex_, Integer, Pattern } field = Real;
    enum Sym { General, Symmetric, Hermitian, SkewSymmetric } sym = General;
};

// Line-oriented tokenizer that tracks positions for error messages.
struct LineReader {
    std::istringstream in;
    int line_no = 0;
    std::string current;

    explicit LineReader(const std::string& text) : in(text) {}

    bool next_content_line() {
        while (std::getline(in, current)) {
            ++line_no;
            std::size_t i = current.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (current[i] == '%' && line_no > 1) continue;  // comment
            return true;
        }
        return false;
    }
};

std::vector<double> parse_numbers(const std::string& line, int line_no, std::size_t expect) {
    std::vector<double> out;
    std::istringstream is(line);
    double v;
    while (is >> v) out.push_back(v);
    std::string rest;
    if (is.clear(), is >> rest)
        throw ParseError("matrix market: trailing token '" + rest + "'", line_no, 1);
    if (expect && out.size() != expect)
        throw ParseError("matrix market: expected " + std::to_string(expect) +
                             " numbers on the line, got " + std::to_string(out.size()),
                         line_no, 1);
    return out;
}

ComplexMatrix parse_matrix_market(const std::string& text) {
    LineReader rd(text);
    if (!rd.next_content_line()) throw ParseError("matrix market: empty file", 1, 1);
    std::istringstream hs(rd.current);
    std::string banner, object, format, field, sym;
    hs >> banner >> object >> format >> field >> sym;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix")
        throw ParseError("matrix market: bad banner line", rd.line_no, 1);
    MmHeader h;
    const std::string fmt = lower(format), fld = lower(field), symm = lower(sym);
    if (fmt == "coordinate")
        h.coordinate = true;
    else if (fmt != "array")
        throw ParseError("matrix market: format must be array or coordinate", rd.line_no, 1);
    if (fld == "real")
        h.field = MmHeader::Real;
    else if (fld == "complex")
        h.field = MmHeader::Complex_;
    else if (fld == "integer")
        h.field = MmHeader::Integer;
    else if (fld == "pattern")
        throw ParseError("matrix market: pattern matrices carry no values", rd.line_no, 1);
    else
        throw ParseError("matrix market: unknown field '" + field + "'", rd.line_no, 1);
    if (symm == "general")
        h.sym = MmHeader::General;
    else if (symm == "symmetric")
        h.sym = MmHeader::Symmetric;
    else if (symm == "hermitian")
        h.sym = MmHeader::Hermitian;
    else if (symm == "skew-symmetric")
        h.sym = MmHeader::SkewSymmetric;
    else
        throw ParseError("matrix market: unknown symmetry '" + sym + "'", rd.line_no, 1);

    if (!rd.next_content_line()) throw ParseError("matrix market: missing size line", rd.line_no, 1);
    std::istringstream ss(rd.current);
    long rows = 0, cols = 0, nnz = 0;
    if (!(ss >> rows >> cols)) throw ParseError("matrix market: bad size line", rd.line_no, 1);
    if (h.coordinate && !(ss >> nnz))
        throw ParseError("matrix market: coordinate size line needs nnz", rd.line_no, 1);
    if (rows <= 0 || cols <= 0)
        throw ParseError("matrix market: dimensions must be positive", rd.line_no, 1);

    ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
    const int vals_per_entry = h.field == MmHeader::Complex_ ? 2 : 1;

    auto place = [&](long i, long j, Complex v) {
        m(i, j) = v;
        if (i != j) {
            switch (h.sym) {
                case MmHeader::General: break;
                case MmHeader::Symmetric: m(j, i) = v; break;
                case MmHeader::Hermitian: m(j, i) = std::conj(v); break;
                case MmHeader::SkewSymmetric: m(j, i) = -v; break;
            }
        }
    };

    if (h.coordinate) {
        for (long k = 0; k < nnz; ++k) {
            if (!rd.next_content_line())
                throw ParseError("matrix market: expected " + std::to_string(nnz) +
                                     " entries, file ended after " + std::to_string(k),
                                 rd.line_no, 1);
            auto nums = parse_numbers(rd.current, rd.line_no, 2 + vals_per_entry);
            const long i = static_cast<long>(nums[0]) - 1;
            const long j = static_cast<long>(nums[1]) - 1;
            if (i < 0 || i >= rows || j < 0 || j >= cols)
                throw ParseError("matrix market: index out of range", rd.line_no, 1);
            const Complex v = vals_per_entry == 2 ? Complex(nums[2], nums[3]) : Complex(nums[2], 0);
            place(i, j, v);
        }
    } else {
        // array format: column-major; symmetric variants store the lower triangle
        std::vector<double> stash;
        std::vector<std::pair<long, long>> order;
        if (h.sym == MmHeader::General) {
            for (long j = 0; j < cols; ++j)
                for (long i2 = 0; i2 < rows; ++i2) order.emplace_back(i2, j);
        } else {
            if (rows != cols)
                throw ParseError("matrix market: symmetric array must be square", rd.line_no, 1);
            const bool skip_diag = h.sym == MmHeader::SkewSymmetric;
            for (long j = 0; j < cols; ++j)
                for (long i2 = j + (skip_diag ? 1 : 0); i2 < rows; ++i2) order.emplace_back(i2, j);
        }
        for (const auto& [ei, ej] : order) {
            while (stash.size() < static_cast<std::size_t>(vals_per_entry)) {
                if (!rd.next_content_line())
                    throw ParseError("matrix market: array data ended early", rd.line_no, 1);
                auto nums = parse_numbers(rd.current, rd.line_no, 0);
                stash.insert(stash.end(), nums.begin(), nums.end());
            }
            Complex v = vals_per_entry == 2 ? Complex(stash[0], stash[1]) : Complex(stash[0], 0);
            stash.erase(stash.begin(), stash.begin() + vals_per_entry);
            place(ei, ej, v);
        }
        if (!stash.empty())
            throw ParseError("matrix market: surplus array values", rd.line_no, 1);
    }
    if (!m.allFinite()) throw ParseError("matrix market: non-finite values", rd.line_no, 1);
    return m;
}

}  // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_f12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

ComplexMatrix matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; surface it as a column on line 0
        throw ParseError(std::string("matrix JSON: ") + e.what(), 0,
                         static_cast<int>(e.byte));
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix JSON: need rows, cols, data");
    const long rows = j["rows"].get<long>();
    const long cols = j["cols"].get<long>();
    if (rows <= 0 || cols <= 0) throw ParseError("matrix JSON: dimensions must be positive");
    const auto& data = j["data"];
    if (!data.is_array() || static_cast<long>(data.size()) != rows * cols)
        throw DimensionMismatchError("matrix JSON: data length " + std::to_string(data.size()) +
                                     " does not equal rows*cols = " + std::to_string(rows * cols));
    ComplexMatrix m(rows, cols);
    for (long k = 0; k < rows * cols; ++k) {
        const auto& e = data[k];
        if (!e.is_array() || e.size() != 2)
            throw ParseError("matrix JSON: entry " + std::to_string(k) + " is not an [re, im] pair");
        m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    if (!m.allFinite()) throw ParseError("matrix JSON: non-finite values");
    return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    std::ostringstream os;
    os << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"data\":[";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i + j > 0) os << ',';
            os << '[' << format_g17(m(i, j).real()) << ',' << format_g17(m(i, j).imag()) << ']';
        }
    os << "]}";
    return os.str();
}

ComplexMatrix read_matrix(const std::string& path, MatrixFormat format) {
    const std::string text = read_file(path);
    if (format == MatrixFormat::Json) return matrix_from_json(text);
    return parse_matrix_market(text);
}

ComplexMatrix read_matrix_auto(const std::string& path) {
    const std::string l = lower(path);
    if (l.size() >= 4 && l.compare(l.size() - 4, 4, ".mtx") == 0) return read_matrix(path, MatrixFormat::MatrixMarket);
    if (l.size() >= 3 && l.compare(l.size() - 3, 3, ".mm") == 0) return read_matrix(path, MatrixFormat::MatrixMarket);
    return read_matrix(path, MatrixFormat::Json);
}

void write_matrix(const ComplexMatrix& m, const std::string& path, MatrixFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (format == MatrixFormat::Json) {
        out << matrix_to_json(m) << '\n';
    } else {
        out << "%%MatrixMarket matrix array complex general\n";
        out << m.rows() << ' ' << m.cols() << '\n';
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                out << format_g17(m(i, j).real()) << ' ' << format_g17(m(i, j).imag()) << '\n';
    }
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace nradius
