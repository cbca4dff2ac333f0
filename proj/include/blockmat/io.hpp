#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/scalar.hpp"

namespace blockmat::io {

// JSON document format, one object per matrix:
//   {"kind":"zero","er":N,"ec":N}
//   {"kind":"scalar","er":N,"val":"<scalar>"}
//   {"kind":"matrix","entries":[["...","..."],...]}
//   {"kind":"rblock","blocks":[[{...},{...}],...]}
// Scalar literals use the Scalar text grammar; integer JSON numbers are also
// accepted on input. Output is deterministic: fixed key order, lowest-terms
// scalars rendered as strings, compact single-line form.

namespace detail {

inline Scalar scalar_from_json(const nlohmann::json& j, const char* where) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<std::int64_t>()));
    throw ParseError(std::string(where) +
                     ": scalar values must be strings or integers, got " +
                     std::string(j.type_name()));
}

inline int positive_int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key))
        throw ParseError(std::string("document: missing field '") + key + "'");
    const nlohmann::json& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError(std::string("document: field '") + key + "' must be an integer");
    auto n = v.get<std::int64_t>();
    if (n < 1 || n > 1000000)
        throw ParseError(std::string("document: field '") + key +
                         "' must be a positive count, got " + std::to_string(n));
    return static_cast<int>(n);
}

} // namespace detail

/// Builds a block matrix from a parsed JSON document. Structural problems
/// surface as the same ShapeError/DimensionError the constructors raise.
inline BlockMatrix from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("document: expected an object with a string 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();

    if (kind == "zero") {
        return BlockMatrix::zero(detail::positive_int_field(j, "er"),
                                 detail::positive_int_field(j, "ec"));
    }
    if (kind == "scalar") {
        if (!j.contains("val")) throw ParseError("scalar document: missing 'val'");
        return BlockMatrix::scalar(detail::positive_int_field(j, "er"),
                                   detail::scalar_from_json(j.at("val"), "scalar document"));
    }
    if (kind == "matrix") {
        if (!j.contains("entries") || !j.at("entries").is_array())
            throw ParseError("matrix document: missing 'entries' array");
        const nlohmann::json& rows = j.at("entries");
        if (rows.empty()) throw DimensionError("matrix document: empty entries");
        std::size_t ncols = 0;
        std::vector<Scalar> entries;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const nlohmann::json& row = rows.at(r);
            if (!row.is_array())
                throw ParseError("matrix document: entries rows must be arrays");
            if (r == 0) {
                ncols = row.size();
                entries.reserve(rows.size() * ncols);
            } else if (row.size() != ncols) {
                throw DimensionError("matrix document: ragged entry rows");
            }
            for (const nlohmann::json& cell : row) {
                if (cell.is_object())
                    throw ParseError(
                        "matrix document: entries must be scalars, not block documents");
                entries.push_back(detail::scalar_from_json(cell, "matrix document"));
            }
        }
        return BlockMatrix::matrix(ElementGrid(static_cast<int>(rows.size()),
                                               static_cast<int>(ncols),
                                               std::move(entries)));
    }
    if (kind == "rblock") {
        if (!j.contains("blocks") || !j.at("blocks").is_array())
            throw ParseError("rblock document: missing 'blocks' array");
        const nlohmann::json& rows = j.at("blocks");
        if (rows.empty()) throw DimensionError("rblock document: empty blocks");
        std::size_t ncols = 0;
        std::vector<BlockMatrix> children;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const nlohmann::json& row = rows.at(r);
            if (!row.is_array())
                throw ParseError("rblock document: blocks rows must be arrays");
            if (r == 0) {
                ncols = row.size();
                children.reserve(rows.size() * ncols);
            } else if (row.size() != ncols) {
                throw DimensionError("rblock document: ragged block rows");
            }
            for (const nlohmann::json& cell : row) {
                if (!cell.is_object())
                    throw ParseError(
                        "rblock document: blocks mix scalar entries with block documents");
                children.push_back(from_json(cell));
            }
        }
        return BlockMatrix::rblock(BlockGrid(static_cast<int>(rows.size()),
                                             static_cast<int>(ncols),
                                             std::move(children)));
    }
    throw ParseError("document: unknown kind '" + kind + "'");
}

inline nlohmann::ordered_json to_json(const BlockMatrix& b) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(b.kind());
    switch (b.kind()) {
        case BlockKind::Zero:
            j["er"] = b.elt_rows();
            j["ec"] = b.elt_cols();
            break;
        case BlockKind::ScalarDiag:
            j["er"] = b.elt_rows();
            j["val"] = b.scalar_value().str();
            break;
        case BlockKind::Leaf: {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int r = 1; r <= b.elt_rows(); ++r) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int c = 1; c <= b.elt_cols(); ++c)
                    row.push_back(b.grid().at(r, c).str());
                rows.push_back(std::move(row));
            }
            j["entries"] = std::move(rows);
            break;
        }
        case BlockKind::RBlock: {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int i = 1; i <= b.block_rows(); ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int k = 1; k <= b.block_cols(); ++k)
                    row.push_back(to_json(b.block(i, k)));
                rows.push_back(std::move(row));
            }
            j["blocks"] = std::move(rows);
            break;
        }
    }
    return j;
}

/// Parses one document. Wraps JSON syntax errors (which carry the byte
/// position) in ParseError; structural errors propagate from the
/// constructors.
inline BlockMatrix parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    return from_json(j);
}

/// Serializes one document in the deterministic compact form.
inline std::string write_document(const BlockMatrix& b) {
    return to_json(b).dump();
}

} // namespace blockmat::io
