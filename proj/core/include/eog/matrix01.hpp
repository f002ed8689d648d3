#pragma once

// 0-1 matrix patterns: containment, connectedness, staircase matrices,
// elementary operations, the nine-matrix obstruction family and an exact
// small-n extremal oracle.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eog/classify.hpp"
#include "eog/turan.hpp"

namespace eog {

class Matrix01 {
public:
    Matrix01() = default;
    /// All-zero matrix. Throws unless both dimensions are positive.
    Matrix01(int rows, int cols);
    /// Rows of '0'/'1' characters; every row must have the same length.
    static Matrix01 from_rows(const std::vector<std::string>& rows);
    /// Rows separated by newlines or ';' ("11;01"). Blank lines and '#'
    /// comments are ignored.
    static Matrix01 parse(std::string_view text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
    void set(int i, int j, bool one = true) { cells_[index(i, j)] = one ? 1 : 0; }
    int ones() const;
    bool all_zero() const { return ones() == 0; }

    Matrix01 transposed() const;
    Matrix01 rotated() const;  // 90 degrees clockwise
    Matrix01 column_reversed() const;

    /// Rows joined by ';'.
    std::string str() const;

    friend bool operator==(const Matrix01&, const Matrix01&) = default;
    friend auto operator<=>(const Matrix01&, const Matrix01&) = default;

private:
    std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<unsigned char> cells_;
};

/// Row and column selections exist covering every 1 of b. Throws if b is all zero.
bool contains_pattern(const Matrix01& a, const Matrix01& b);

/// Rows and columns form a connected bipartite graph through the 1 entries.
bool is_connected_matrix(const Matrix01& a);

/// Every column holds exactly one 1.
bool is_light(const Matrix01& a);

/// Positions are 1-based (row, column) pairs, each step raising exactly one
/// coordinate by one.
struct Staircase {
    std::vector<std::pair<int, int>> positions;
    bool column_reversed = false;
};

/// The rows x cols matrix the staircase describes: its cells, an arm from
/// the first cell to the left and upward boundary, one from the last cell
/// to the right and lower boundary, zeros elsewhere. Ignores column_reversed.
/// Throws if the positions do not form a staircase inside the grid.
Matrix01 described_matrix(const Staircase& s, int rows, int cols);

/// Whether s (with its column_reversed flag) describes a.
bool describes(const Staircase& s, const Matrix01& a);

/// First certificate by orientation (plain first), length, start position in
/// row-major order and step choices (right before down). Throws if a is all zero.
std::optional<Staircase> staircase_certificate(const Matrix01& a);

enum class Boundary { Top, Bottom, Left, Right };

/// New boundary row or column holding a single 1 at `offset` (a column
/// index for Top/Bottom, a row index for Left/Right).
struct Placement {
    Boundary side = Boundary::Right;
    int offset = 0;
};

/// Throws unless the new 1 lies next to an existing 1.
Matrix01 elementary_op(const Matrix01& a, const Placement& p);

/// Operations turning (1) into a, or nullopt when none exists.
std::optional<std::vector<Placement>> reach_from_unit(const Matrix01& a);

/// The 2x2 all-ones matrix and the rotations of (110;101) and its transpose.
const std::vector<Matrix01>& forbidden_family();

struct MatrixVerdict {
    GrowthClass growth = GrowthClass::Linear;
    std::optional<Staircase> staircase;  // Linear evidence
    std::optional<Matrix01> obstruction;  // a forbidden_family member inside a
};

/// Throws on all-zero or disconnected input.
MatrixVerdict classify_matrix(const Matrix01& a);

struct MatrixResult {
    int value = 0;
    Matrix01 witness;
    SearchStatus status = SearchStatus::Exact;
    long long nodes = 0;
};

/// Most 1 entries in an n x n matrix avoiding b. Throws on all-zero b or n < 1.
MatrixResult eex_exact(int n, const Matrix01& b, const Budget& budget = {});

}  // namespace eog
