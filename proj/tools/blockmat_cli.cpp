// Command-line front end: reads block-matrix documents, runs operations,
// prints result documents (one JSON object per line) and structure trees.
//
// Exit status: 0 on success, 1 when an operation FAILs on singular input,
// 2 on parse/shape/usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "blockmat/blockmat.hpp"

namespace {

using namespace blockmat;

constexpr int kExitOk = 0;
constexpr int kExitSingular = 1;
constexpr int kExitError = 2;

BlockMatrix load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return io::parse_document(buf.str());
}

void emit(const BlockMatrix& b) { std::cout << io::write_document(b) << "\n"; }

int cmd_show(const std::string& file) {
    std::cout << format_structure(load(file)) << "\n";
    return kExitOk;
}

int cmd_add(const std::string& file_a, const std::string& file_b) {
    emit(plus(load(file_a), load(file_b)));
    return kExitOk;
}

int cmd_mul(const std::string& file_a, const std::string& file_b) {
    emit(times(load(file_a), load(file_b)));
    return kExitOk;
}

int cmd_neg(const std::string& file) {
    emit(neg(load(file)));
    return kExitOk;
}

int cmd_htrans(const std::string& file) {
    emit(herm_trans(load(file)));
    return kExitOk;
}

int cmd_inv(const std::string& file, bool verbose) {
    InvOutcome out = inv_traced(load(file));
    if (verbose) std::cerr << "inversion path: " << to_string(out.path) << "\n";
    if (!out.inverse) {
        std::cerr << "FAIL: singular\n";
        return kExitSingular;
    }
    emit(*out.inverse);
    return kExitOk;
}

int cmd_plu(const std::string& file) {
    BlockMatrix m = load(file);
    auto f = plu_decomp(m);
    if (!f) {
        std::cerr << "FAIL: singular leading principal minor\n";
        return kExitSingular;
    }
    emit(f->p);
    emit(f->l);
    emit(f->u);
    bool rebuilt = eq_elements(times(times(f->p, f->l), f->u), m);
    bool lower = is_unit_lower(f->l);
    bool upper = is_upper(f->u);
    std::cout << "check: reconstruction=" << (rebuilt ? "yes" : "no")
              << " unit_lower=" << (lower ? "yes" : "no")
              << " upper=" << (upper ? "yes" : "no") << "\n";
    return rebuilt && lower && upper ? kExitOk : kExitError;
}

int cmd_check_inv(const std::string& file) {
    BlockMatrix m = load(file);
    auto r = inv(m);
    if (!r) {
        std::cerr << "FAIL: singular\n";
        return kExitSingular;
    }
    BlockMatrix id = BlockMatrix::scalar(m.elt_rows(), Scalar(1));
    bool ok = eq_elements(times(m, *r), id) && eq_elements(times(*r, m), id);
    std::cout << "identity: " << (ok ? "yes" : "no") << "\n";
    return ok ? kExitOk : kExitSingular;
}

// Built-in end-to-end reproductions, independent of any input files.
int cmd_selftest() {
    int failures = 0;
    auto report = [&failures](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "ok" : "FAILED") << "\n";
        if (!ok) ++failures;
    };

    // A 3x5 matrix built from four dense blocks: structure, dimensions and
    // element reads through the nesting.
    {
        BlockMatrix ex = bm(
            {{bm({{Scalar(11), Scalar(12)}, {Scalar(13), Scalar(14)}}),
              bm({{Scalar(15), Scalar(16), Scalar(17)},
                  {Scalar(18), Scalar(19), Scalar(20)}})},
             {bm({{Scalar(21), Scalar(22)}}),
              bm({{Scalar(23), Scalar(24), Scalar(25)}})}});
        bool ok = ex.dims() == std::pair<int, int>(3, 5) &&
                  ex.block_dims() == std::pair<int, int>(2, 2) &&
                  ex.elt(2, 3) == Scalar(18) && ex.elt(3, 5) == Scalar(25) &&
                  format_structure(ex) ==
                      "R 3×5\n  M 2×2\n  M 2×3\n  M 1×2\n  M 1×3";
        ElementGrid flat = oracle::flatten(ex);
        int expect[3][5] = {{11, 12, 15, 16, 17}, {13, 14, 18, 19, 20},
                            {21, 22, 23, 24, 25}};
        for (int r = 1; r <= 3 && ok; ++r)
            for (int c = 1; c <= 5 && ok; ++c)
                ok = flat.at(r, c) == Scalar(expect[r - 1][c - 1]);
        report("structure-example", ok);
    }

    // An invertible matrix whose four blocks are all singular: the Schur
    // route fails, the Gram fallback succeeds, the product is the identity.
    {
        auto leaf = [](int a, int b, int c, int d) {
            return bm({{Scalar(a), Scalar(b)}, {Scalar(c), Scalar(d)}});
        };
        BlockMatrix m = bm({{leaf(1, 0, 0, 0), leaf(0, 0, 0, 2)},
                            {leaf(0, 3, 0, 0), leaf(0, 0, 4, 0)}});
        bool ok = !try_inv(m).has_value();
        InvOutcome out = inv_traced(m);
        ok = ok && out.path == InvPath::GramFallback && out.inverse.has_value();
        if (ok) {
            BlockMatrix id = BlockMatrix::scalar(4, Scalar(1));
            ok = eq_elements(times(m, *out.inverse), id) &&
                 eq_elements(times(*out.inverse, m), id);
        }
        report("singular-blocks-inverse", ok);
    }

    // Block PLU of a 2x2 grid: exact reconstruction and element-wise
    // triangular factors, recursively.
    {
        auto leaf = [](int a, int b, int c, int d) {
            return bm({{Scalar(a), Scalar(b)}, {Scalar(c), Scalar(d)}});
        };
        BlockMatrix m = bm({{leaf(2, 1, 1, 1), leaf(1, 0, 0, 1)},
                            {leaf(1, 2, 0, 1), leaf(3, 1, 1, 2)}});
        auto f = plu_decomp(m);
        bool ok = f.has_value();
        if (ok) {
            ok = eq_elements(times(times(f->p, f->l), f->u), m) &&
                 is_unit_lower(f->l) && is_upper(f->u) &&
                 is_unit_lower(f->l.block(1, 1)) && is_unit_lower(f->l.block(2, 2)) &&
                 is_upper(f->u.block(1, 1)) && is_upper(f->u.block(2, 2));
        }
        report("block-plu", ok);
    }

    std::cout << "selftest: " << (failures == 0 ? "all ok" : "failures") << "\n";
    return failures == 0 ? kExitOk : kExitError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive block matrices over exact rationals"};
    app.require_subcommand(1);

    std::string file_a, file_b;
    bool verbose = false;

    CLI::App* show = app.add_subcommand("show", "Print the structure tree of a matrix");
    show->add_option("file", file_a, "matrix document")->required();

    CLI::App* add = app.add_subcommand("add", "Add two matrices");
    add->add_option("a", file_a, "left operand")->required();
    add->add_option("b", file_b, "right operand")->required();

    CLI::App* mul = app.add_subcommand("mul", "Multiply two matrices");
    mul->add_option("a", file_a, "left operand")->required();
    mul->add_option("b", file_b, "right operand")->required();

    CLI::App* negc = app.add_subcommand("neg", "Negate a matrix");
    negc->add_option("a", file_a, "operand")->required();

    CLI::App* htrans = app.add_subcommand("htrans", "Hermitian transpose");
    htrans->add_option("a", file_a, "operand")->required();

    CLI::App* invc = app.add_subcommand("inv", "Invert a matrix");
    invc->add_option("a", file_a, "operand")->required();
    invc->add_flag("--verbose", verbose, "report which inversion path was used");

    CLI::App* plu = app.add_subcommand("plu", "Block PLU decomposition");
    plu->add_option("a", file_a, "operand")->required();

    CLI::App* check = app.add_subcommand("check-inv", "Invert and verify the product");
    check->add_option("a", file_a, "operand")->required();

    app.add_subcommand("selftest", "Run the built-in end-to-end checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (show->parsed()) return cmd_show(file_a);
        if (add->parsed()) return cmd_add(file_a, file_b);
        if (mul->parsed()) return cmd_mul(file_a, file_b);
        if (negc->parsed()) return cmd_neg(file_a);
        if (htrans->parsed()) return cmd_htrans(file_a);
        if (invc->parsed()) return cmd_inv(file_a, verbose);
        if (plu->parsed()) return cmd_plu(file_a);
        if (check->parsed()) return cmd_check_inv(file_a);
        return cmd_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
}
