#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>

#include "nradius/matrix_io.hpp"
#include "test_util.hpp"

using namespace nradius;
using testutil::random_matrix;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents = "") : path(name) {
        if (!contents.empty()) {
            std::ofstream out(path, std::ios::binary);
            out << contents;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("json matrix parsing") {
    TempFile f("io_nil.json",
               R"({"rows":2,"cols":2,"data":[[0,0],[1,0],[0,0],[0,0]]})");
    ComplexMatrix m = read_matrix(f.path, MatrixFormat::Json);
    CHECK(m.rows() == 2);
    CHECK(m(0, 1) == Complex(1, 0));
    CHECK(m(0, 0) == Complex(0, 0));
    CHECK(m(1, 0) == Complex(0, 0));
}

TEST_CASE("json matrix errors") {
    TempFile bad_dims("io_bad1.json", R"({"rows":2,"cols":2,"data":[[0,0],[1,0]]})");
    CHECK_THROWS_AS(read_matrix(bad_dims.path, MatrixFormat::Json), DimensionMismatchError);

    TempFile bad_entry("io_bad2.json", R"({"rows":1,"cols":1,"data":[[0]]})");
    CHECK_THROWS_AS(read_matrix(bad_entry.path, MatrixFormat::Json), ParseError);

    TempFile bad_json("io_bad3.json", "{rows: 1");
    CHECK_THROWS_AS(read_matrix(bad_json.path, MatrixFormat::Json), ParseError);

    CHECK_THROWS_AS(read_matrix("does_not_exist.json", MatrixFormat::Json), IoError);
}

TEST_CASE("matrix market real array is column-major") {
    TempFile f("io_arr.mtx",
               "%%MatrixMarket matrix array real general\n"
               "% a comment\n"
               "2 2\n8\n1\n1\n0\n");
    ComplexMatrix m = read_matrix(f.path, MatrixFormat::MatrixMarket);
    CHECK(m(0, 0) == Complex(8, 0));
    CHECK(m(0, 1) == Complex(1, 0));
    CHECK(m(1, 0) == Complex(1, 0));
    CHECK(m(1, 1) == Complex(0, 0));
}

TEST_CASE("matrix market coordinate complex is densified") {
    TempFile f("io_coord.mtx",
               "%%MatrixMarket matrix coordinate complex general\n"
               "2 3 2\n"
               "1 2 1.5 -2.5\n"
               "2 3 0 1\n");
    ComplexMatrix m = read_matrix(f.path, MatrixFormat::MatrixMarket);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(0, 1) == Complex(1.5, -2.5));
    CHECK(m(1, 2) == Complex(0, 1));
    CHECK(m(0, 0) == Complex(0, 0));
}

TEST_CASE("matrix market symmetry expansion") {
    TempFile sym("io_sym.mtx",
                 "%%MatrixMarket matrix coordinate real symmetric\n"
                 "2 2 2\n"
                 "2 1 3\n"
                 "1 1 1\n");
    ComplexMatrix m = read_matrix(sym.path, MatrixFormat::MatrixMarket);
    CHECK(m(1, 0) == Complex(3, 0));
    CHECK(m(0, 1) == Complex(3, 0));
    CHECK(m(0, 0) == Complex(1, 0));

    TempFile herm("io_herm.mtx",
                  "%%MatrixMarket matrix coordinate complex hermitian\n"
                  "2 2 1\n"
                  "2 1 0 2\n");
    ComplexMatrix h = read_matrix(herm.path, MatrixFormat::MatrixMarket);
    CHECK(h(1, 0) == Complex(0, 2));
    CHECK(h(0, 1) == Complex(0, -2));

    TempFile skew("io_skew.mtx",
                  "%%MatrixMarket matrix array integer skew-symmetric\n"
                  "2 2\n"
                  "5\n");
    ComplexMatrix k = read_matrix(skew.path, MatrixFormat::MatrixMarket);
    CHECK(k(1, 0) == Complex(5, 0));
    CHECK(k(0, 1) == Complex(-5, 0));
    CHECK(k(0, 0) == Complex(0, 0));
}

TEST_CASE("matrix market errors carry positions") {
    TempFile bad_banner("io_b1.mtx", "%%NotMarket matrix array real general\n1 1\n0\n");
    CHECK_THROWS_AS(read_matrix(bad_banner.path, MatrixFormat::MatrixMarket), ParseError);

    TempFile truncated("io_b2.mtx",
                       "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 5\n");
    try {
        read_matrix(truncated.path, MatrixFormat::MatrixMarket);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line >= 3);
    }

    TempFile pattern("io_b3.mtx", "%%MatrixMarket matrix coordinate pattern general\n1 1 1\n1 1\n");
    CHECK_THROWS_AS(read_matrix(pattern.path, MatrixFormat::MatrixMarket), ParseError);

    TempFile out_of_range("io_b4.mtx",
                          "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
    CHECK_THROWS_AS(read_matrix(out_of_range.path, MatrixFormat::MatrixMarket), ParseError);
}

TEST_CASE("write/read round trip is bit exact") {
    GaussianStream g(2025);
    ComplexMatrix m = random_matrix(g, 5, 5);

    TempFile jf("io_rt.json");
    write_matrix(m, jf.path, MatrixFormat::Json);
    ComplexMatrix mj = read_matrix(jf.path, MatrixFormat::Json);
    REQUIRE(mj.rows() == 5);
    CHECK(std::memcmp(m.data(), mj.data(), sizeof(Complex) * 25) == 0);

    TempFile mf("io_rt.mtx");
    write_matrix(m, mf.path, MatrixFormat::MatrixMarket);
    ComplexMatrix mm = read_matrix(mf.path, MatrixFormat::MatrixMarket);
    CHECK(std::memcmp(m.data(), mm.data(), sizeof(Complex) * 25) == 0);
}

TEST_CASE("format inference by extension") {
    GaussianStream g(77);
    ComplexMatrix m = random_matrix(g, 2, 2);
    TempFile jf("io_auto.json");
    TempFile mf("io_auto.mtx");
    write_matrix(m, jf.path, MatrixFormat::Json);
    write_matrix(m, mf.path, MatrixFormat::MatrixMarket);
    CHECK((read_matrix_auto(jf.path) - m).norm() == 0.0);
    CHECK((read_matrix_auto(mf.path) - m).norm() == 0.0);
}

TEST_CASE("float renderers") {
    CHECK(format_g17(0.5) == "0.5");
    CHECK(format_g12(4.0) == "4");
    CHECK(format_f12(4.0) == "4.000000000000");
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_g17(v)) == v);  // 17 digits round-trip
}
