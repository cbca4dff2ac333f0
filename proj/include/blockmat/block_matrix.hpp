#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blockmat/errors.hpp"
#include "blockmat/scalar.hpp"

namespace blockmat {

/// The four node kinds. The enumeration order is fixed and part of the
/// serialization contract.
enum class BlockKind { Zero = 0, ScalarDiag = 1, Leaf = 2, RBlock = 3 };

inline const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::Zero: return "zero";
        case BlockKind::ScalarDiag: return "scalar";
        case BlockKind::Leaf: return "matrix";
        case BlockKind::RBlock: return "rblock";
    }
    return "?";
}

/// One-letter structure labels: Z (zero), S (scalar), M (matrix), R (rblock).
inline char kind_letter(BlockKind k) {
    switch (k) {
        case BlockKind::Zero: return 'Z';
        case BlockKind::ScalarDiag: return 'S';
        case BlockKind::Leaf: return 'M';
        case BlockKind::RBlock: return 'R';
    }
    return '?';
}

/// Dense row-major grid of scalars. Indices are 1-based, like everything in
/// the public API.
class ElementGrid {
public:
    ElementGrid(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(checked_size(rows, cols)) {}

    ElementGrid(int rows, int cols, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != checked_size(rows, cols))
            throw DimensionError("element grid: expected " +
                                 std::to_string(static_cast<long long>(rows) * cols) +
                                 " entries, got " + std::to_string(entries_.size()));
    }

    ElementGrid(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
        checked_size(rows_, cols_);
        entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_)
                throw DimensionError("element grid: ragged rows");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    const Scalar& at(int r, int c) const {
        check_index(r, c);
        return entries_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
    }
    Scalar& at(int r, int c) {
        check_index(r, c);
        return entries_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
    }

    /// Row-major storage view.
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    friend bool operator==(const ElementGrid& a, const ElementGrid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ElementGrid& a, const ElementGrid& b) {
        return !(a == b);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> entries_;

    static std::size_t checked_size(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw DimensionError("element grid: dimensions must be positive, got " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
        return static_cast<std::size_t>(rows) * cols;
    }

    void check_index(int r, int c) const {
        if (r < 1 || r > rows_ || c < 1 || c > cols_)
            throw IndexError("element index (" + std::to_string(r) + "," +
                             std::to_string(c) + ") outside " + std::to_string(rows_) +
                             "x" + std::to_string(cols_) + " grid");
    }
};

class BlockMatrix;

/// Row-major grid of child block matrices, the payload of an rblock node.
class BlockGrid {
public:
    BlockGrid(int brows, int bcols, std::vector<BlockMatrix> children);
    BlockGrid(std::initializer_list<std::initializer_list<BlockMatrix>> rows);

    int brows() const noexcept { return brows_; }
    int bcols() const noexcept { return bcols_; }
    const BlockMatrix& at(int r, int c) const;
    const std::vector<BlockMatrix>& children() const noexcept { return children_; }

private:
    int brows_ = 0;
    int bcols_ = 0;
    std::vector<BlockMatrix> children_;
};

/// Sizes of the consecutive slices an axis is split into. Every size is
/// positive and the sizes sum to the axis length.
using Partition = std::vector<int>;

/// Immutable recursive block matrix.
///
/// A node is one of four kinds:
///   - Zero: an all-zero er x ec matrix, no stored entries;
///   - ScalarDiag: s * I of size er (er == ec), storing only s;
///   - Leaf: a dense ElementGrid of size er x ec;
///   - RBlock: a grid of child block matrices whose dimensions tile er x ec.
///
/// Values are handles to shared immutable nodes, so copies are cheap and all
/// operations return new values. All public indices are 1-based.
class BlockMatrix {
public:
    using Payload = std::variant<std::monostate, Scalar, ElementGrid, BlockGrid>;

    /// Zero matrix of the given element dimensions.
    static BlockMatrix zero(int er, int ec) {
        check_dims(er, ec);
        return BlockMatrix(BlockKind::Zero, er, ec, std::monostate{});
    }

    /// s * I of size er.
    static BlockMatrix scalar(int er, Scalar s) {
        check_dims(er, er);
        return BlockMatrix(BlockKind::ScalarDiag, er, er, std::move(s));
    }

    /// Dense leaf with the grid's dimensions.
    static BlockMatrix matrix(ElementGrid grid) {
        int er = grid.rows(), ec = grid.cols();
        return BlockMatrix(BlockKind::Leaf, er, ec, std::move(grid));
    }

    /// Recursive block node. Checks the row/column consistency rules and
    /// derives er/ec from the children; reports the first offending block.
    static BlockMatrix rblock(BlockGrid grid);

    /// Low-level node constructor that skips every well-formedness check.
    /// Exists so validate() has something to reject; not for general use.
    static BlockMatrix raw(BlockKind kind, int er, int ec, Payload val) {
        return BlockMatrix(kind, er, ec, std::move(val));
    }

    BlockKind kind() const noexcept { return node_->kind; }

    /// Leaf element row/column counts, through all nesting.
    int elt_rows() const noexcept { return node_->er; }
    int elt_cols() const noexcept { return node_->ec; }
    std::pair<int, int> dims() const noexcept { return {node_->er, node_->ec}; }
    bool is_square() const noexcept { return node_->er == node_->ec; }

    /// Grid shape when viewed as a block matrix; (1,1) for non-rblock nodes.
    int block_rows() const noexcept {
        return kind() == BlockKind::RBlock ? blocks().brows() : 1;
    }
    int block_cols() const noexcept {
        return kind() == BlockKind::RBlock ? blocks().bcols() : 1;
    }
    std::pair<int, int> block_dims() const noexcept {
        return {block_rows(), block_cols()};
    }

    /// Child block at 1-based grid position (r, c). Non-rblock nodes are
    /// their own single block at (1,1).
    const BlockMatrix& block(int r, int c) const {
        if (kind() == BlockKind::RBlock) return blocks().at(r, c);
        if (r != 1 || c != 1)
            throw IndexError("block index (" + std::to_string(r) + "," +
                             std::to_string(c) + ") outside 1x1 block grid");
        return *this;
    }

    /// Element at 1-based position (r, c) of the un-partitioned matrix.
    Scalar elt(int r, int c) const {
        if (r < 1 || r > elt_rows() || c < 1 || c > elt_cols())
            throw IndexError("element index (" + std::to_string(r) + "," +
                             std::to_string(c) + ") outside " +
                             std::to_string(elt_rows()) + "x" +
                             std::to_string(elt_cols()) + " matrix");
        switch (kind()) {
            case BlockKind::Zero:
                return Scalar(0);
            case BlockKind::ScalarDiag:
                return r == c ? scalar_value() : Scalar(0);
            case BlockKind::Leaf:
                return grid().at(r, c);
            case BlockKind::RBlock: {
                const BlockGrid& g = blocks();
                int br = 1;
                while (r > g.at(br, 1).elt_rows()) {
                    r -= g.at(br, 1).elt_rows();
                    ++br;
                }
                int bc = 1;
                while (c > g.at(1, bc).elt_cols()) {
                    c -= g.at(1, bc).elt_cols();
                    ++bc;
                }
                return g.at(br, bc).elt(r, c);
            }
        }
        throw Error("corrupt kind tag");
    }

    // Payload views. Low-level companions of kind(); each throws unless the
    // node has the matching kind.
    const Scalar& scalar_value() const {
        return payload_as<Scalar>(BlockKind::ScalarDiag);
    }
    const ElementGrid& grid() const {
        return payload_as<ElementGrid>(BlockKind::Leaf);
    }
    const BlockGrid& blocks() const {
        return payload_as<BlockGrid>(BlockKind::RBlock);
    }
    const Payload& payload() const noexcept { return node_->val; }

    /// Block-row heights. A non-rblock node is a single slice of its full height.
    Partition row_partition() const {
        if (kind() != BlockKind::RBlock) return {elt_rows()};
        Partition p;
        p.reserve(block_rows());
        for (int i = 1; i <= block_rows(); ++i)
            p.push_back(blocks().at(i, 1).elt_rows());
        return p;
    }

    /// Block-column widths.
    Partition col_partition() const {
        if (kind() != BlockKind::RBlock) return {elt_cols()};
        Partition p;
        p.reserve(block_cols());
        for (int j = 1; j <= block_cols(); ++j)
            p.push_back(blocks().at(1, j).elt_cols());
        return p;
    }

    /// Structural identity: same kinds, dimensions, partitions and payloads.
    /// Use eq_elements() for the structure-insensitive mathematical equality.
    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.dims() != b.dims()) return false;
        switch (a.kind()) {
            case BlockKind::Zero:
                return true;
            case BlockKind::ScalarDiag:
                return a.scalar_value() == b.scalar_value();
            case BlockKind::Leaf:
                return a.grid() == b.grid();
            case BlockKind::RBlock: {
                const BlockGrid& ga = a.blocks();
                const BlockGrid& gb = b.blocks();
                if (ga.brows() != gb.brows() || ga.bcols() != gb.bcols()) return false;
                return ga.children() == gb.children();
            }
        }
        return false;
    }
    friend bool operator!=(const BlockMatrix& a, const BlockMatrix& b) {
        return !(a == b);
    }

private:
    struct Node {
        BlockKind kind;
        int er;
        int ec;
        Payload val;
    };

    std::shared_ptr<const Node> node_;

    BlockMatrix(BlockKind kind, int er, int ec, Payload val)
        : node_(std::make_shared<Node>(Node{kind, er, ec, std::move(val)})) {}

    static void check_dims(int er, int ec) {
        if (er < 1 || ec < 1)
            throw DimensionError("block matrix dimensions must be positive, got " +
                                 std::to_string(er) + "x" + std::to_string(ec));
    }

    template <typename T>
    const T& payload_as(BlockKind expected) const {
        if (kind() != expected || !std::holds_alternative<T>(node_->val))
            throw Error(std::string("payload access: node kind is ") +
                        kind_name(kind()) + ", not " + kind_name(expected));
        return std::get<T>(node_->val);
    }
};

inline BlockGrid::BlockGrid(int brows, int bcols, std::vector<BlockMatrix> children)
    : brows_(brows), bcols_(bcols), children_(std::move(children)) {
    if (brows_ < 1 || bcols_ < 1)
        throw DimensionError("block grid: dimensions must be positive, got " +
                             std::to_string(brows_) + "x" + std::to_string(bcols_));
    if (children_.size() != static_cast<std::size_t>(brows_) * bcols_)
        throw DimensionError("block grid: expected " +
                             std::to_string(static_cast<long long>(brows_) * bcols_) +
                             " children, got " + std::to_string(children_.size()));
}

inline BlockGrid::BlockGrid(
    std::initializer_list<std::initializer_list<BlockMatrix>> rows) {
    brows_ = static_cast<int>(rows.size());
    bcols_ = brows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    if (brows_ < 1 || bcols_ < 1)
        throw DimensionError("block grid: dimensions must be positive");
    children_.reserve(static_cast<std::size_t>(brows_) * bcols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != bcols_)
            throw DimensionError("block grid: ragged rows");
        children_.insert(children_.end(), row.begin(), row.end());
    }
}

inline const BlockMatrix& BlockGrid::at(int r, int c) const {
    if (r < 1 || r > brows_ || c < 1 || c > bcols_)
        throw IndexError("block index (" + std::to_string(r) + "," +
                         std::to_string(c) + ") outside " + std::to_string(brows_) +
                         "x" + std::to_string(bcols_) + " block grid");
    return children_[static_cast<std::size_t>(r - 1) * bcols_ + (c - 1)];
}

inline BlockMatrix BlockMatrix::rblock(BlockGrid grid) {
    // Row/column consistency: one er per block row, one ec per block column.
    for (int i = 1; i <= grid.brows(); ++i)
        for (int j = 1; j <= grid.bcols(); ++j) {
            const BlockMatrix& child = grid.at(i, j);
            if (child.elt_rows() != grid.at(i, 1).elt_rows())
                throw ShapeError("rblock: block (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") has er=" +
                                 std::to_string(child.elt_rows()) +
                                 ", but block row " + std::to_string(i) +
                                 " has er=" + std::to_string(grid.at(i, 1).elt_rows()));
            if (child.elt_cols() != grid.at(1, j).elt_cols())
                throw ShapeError("rblock: block (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") has ec=" +
                                 std::to_string(child.elt_cols()) +
                                 ", but block column " + std::to_string(j) +
                                 " has ec=" + std::to_string(grid.at(1, j).elt_cols()));
        }
    int er = 0, ec = 0;
    for (int i = 1; i <= grid.brows(); ++i) er += grid.at(i, 1).elt_rows();
    for (int j = 1; j <= grid.bcols(); ++j) ec += grid.at(1, j).elt_cols();
    return BlockMatrix(BlockKind::RBlock, er, ec, std::move(grid));
}

/// One cell of a bm() row: either a scalar element or a block matrix.
using BmCell = std::variant<Scalar, BlockMatrix>;

/// Builds a Leaf when every cell is a Scalar and an RBlock when every cell is
/// a BlockMatrix; mixing the two in one call is an error.
inline BlockMatrix bm(const std::vector<std::vector<BmCell>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionError("bm: empty input");
    std::size_t ncols = rows.front().size();
    bool all_scalars = true, all_blocks = true;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DimensionError("bm: ragged rows");
        for (const auto& cell : row) {
            if (std::holds_alternative<Scalar>(cell)) all_blocks = false;
            else all_scalars = false;
        }
    }
    if (all_scalars) {
        std::vector<Scalar> entries;
        entries.reserve(rows.size() * ncols);
        for (const auto& row : rows)
            for (const auto& cell : row) entries.push_back(std::get<Scalar>(cell));
        return BlockMatrix::matrix(ElementGrid(static_cast<int>(rows.size()),
                                               static_cast<int>(ncols),
                                               std::move(entries)));
    }
    if (all_blocks) {
        std::vector<BlockMatrix> children;
        children.reserve(rows.size() * ncols);
        for (const auto& row : rows)
            for (const auto& cell : row) children.push_back(std::get<BlockMatrix>(cell));
        return BlockMatrix::rblock(BlockGrid(static_cast<int>(rows.size()),
                                             static_cast<int>(ncols),
                                             std::move(children)));
    }
    throw ShapeError("bm: rows mix scalars and block matrices");
}

inline BlockMatrix bm(std::initializer_list<std::initializer_list<BmCell>> rows) {
    std::vector<std::vector<BmCell>> copied;
    copied.reserve(rows.size());
    for (const auto& row : rows) copied.emplace_back(row.begin(), row.end());
    return bm(copied);
}

/// Outcome of validate(). When a node violates an invariant, `path` walks
/// from "root" through `/(i,j)` block steps to the offending node.
struct ValidationReport {
    bool ok = true;
    std::string path;
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline ValidationReport violation(const std::string& path, const std::string& msg) {
    return ValidationReport{false, path, msg};
}

inline ValidationReport validate_node(const BlockMatrix& b, const std::string& path) {
    if (b.elt_rows() < 1 || b.elt_cols() < 1)
        return violation(path, "non-positive dimensions");
    switch (b.kind()) {
        case BlockKind::Zero:
            if (!std::holds_alternative<std::monostate>(b.payload()))
                return violation(path, "zero node carries a payload");
            return {};
        case BlockKind::ScalarDiag:
            if (!std::holds_alternative<Scalar>(b.payload()))
                return violation(path, "scalar node payload is not a scalar");
            if (b.elt_rows() != b.elt_cols())
                return violation(path, "scalar node requires er = ec, got " +
                                           std::to_string(b.elt_rows()) + "x" +
                                           std::to_string(b.elt_cols()));
            return {};
        case BlockKind::Leaf: {
            if (!std::holds_alternative<ElementGrid>(b.payload()))
                return violation(path, "matrix node payload is not an element grid");
            const ElementGrid& g = b.grid();
            if (g.rows() != b.elt_rows() || g.cols() != b.elt_cols())
                return violation(path, "matrix node grid is " + std::to_string(g.rows()) +
                                           "x" + std::to_string(g.cols()) +
                                           " but node claims " +
                                           std::to_string(b.elt_rows()) + "x" +
                                           std::to_string(b.elt_cols()));
            return {};
        }
        case BlockKind::RBlock: {
            if (!std::holds_alternative<BlockGrid>(b.payload()))
                return violation(path, "rblock node payload is not a block grid");
            const BlockGrid& g = b.blocks();
            for (int i = 1; i <= g.brows(); ++i)
                for (int j = 1; j <= g.bcols(); ++j) {
                    if (g.at(i, j).elt_rows() != g.at(i, 1).elt_rows())
                        return violation(path, "block (" + std::to_string(i) + "," +
                                                   std::to_string(j) +
                                                   ") er disagrees with its block row");
                    if (g.at(i, j).elt_cols() != g.at(1, j).elt_cols())
                        return violation(path, "block (" + std::to_string(i) + "," +
                                                   std::to_string(j) +
                                                   ") ec disagrees with its block column");
                }
            int er = 0, ec = 0;
            for (int i = 1; i <= g.brows(); ++i) er += g.at(i, 1).elt_rows();
            for (int j = 1; j <= g.bcols(); ++j) ec += g.at(1, j).elt_cols();
            if (er != b.elt_rows())
                return violation(path, "children er sum to " + std::to_string(er) +
                                           ", node claims " + std::to_string(b.elt_rows()));
            if (ec != b.elt_cols())
                return violation(path, "children ec sum to " + std::to_string(ec) +
                                           ", node claims " + std::to_string(b.elt_cols()));
            for (int i = 1; i <= g.brows(); ++i)
                for (int j = 1; j <= g.bcols(); ++j) {
                    ValidationReport r = validate_node(
                        g.at(i, j),
                        path + "/(" + std::to_string(i) + "," + std::to_string(j) + ")");
                    if (!r.ok) return r;
                }
            return {};
        }
    }
    return violation(path, "corrupt kind tag");
}

} // namespace detail

/// Recursively checks every well-formedness invariant. Violations are the
/// return value, never exceptions.
inline ValidationReport validate(const BlockMatrix& b) {
    return detail::validate_node(b, "root");
}

namespace detail {

inline void format_structure_rec(const BlockMatrix& b, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += kind_letter(b.kind());
    out += ' ';
    out += std::to_string(b.elt_rows());
    out += "\xC3\x97"; // multiplication sign
    out += std::to_string(b.elt_cols());
    if (b.kind() == BlockKind::RBlock) {
        for (int i = 1; i <= b.block_rows(); ++i)
            for (int j = 1; j <= b.block_cols(); ++j) {
                out += '\n';
                format_structure_rec(b.block(i, j), depth + 1, out);
            }
    }
}

} // namespace detail

/// Renders the node tree, one node per line: kind letter and element
/// dimensions, children indented two spaces in row-major order.
inline std::string format_structure(const BlockMatrix& b) {
    std::string out;
    detail::format_structure_rec(b, 0, out);
    return out;
}

/// Structure-insensitive equality: same element dimensions and equal elements
/// everywhere, regardless of how either side is partitioned.
inline bool eq_elements(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.dims() != b.dims()) return false;
    for (int r = 1; r <= a.elt_rows(); ++r)
        for (int c = 1; c <= a.elt_cols(); ++c)
            if (a.elt(r, c) != b.elt(r, c)) return false;
    return true;
}

} // namespace blockmat
