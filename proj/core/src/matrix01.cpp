#include "eog/matrix01.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

namespace eog {

Matrix01::Matrix01(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error("matrix dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(rows * cols), 0);
}

std::size_t Matrix01::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw Error("matrix index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    return static_cast<std::size_t>(i * cols_ + j);
}

Matrix01 Matrix01::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw Error("matrix has no rows");
    Matrix01 m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        const std::string& r = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(r.size()) != m.cols()) throw Error("matrix rows have different lengths");
        for (int j = 0; j < m.cols(); ++j) {
            char c = r[static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw Error(std::string("unexpected matrix character '") + c + "'");
            m.set(i, j, c == '1');
        }
    }
    return m;
}

Matrix01 Matrix01::parse(std::string_view text) {
    std::vector<std::string> rows;
    std::string line;
    auto flush = [&] {
        auto b = line.find_first_not_of(" \t\r");
        auto e = line.find_last_not_of(" \t\r");
        std::string t = b == std::string::npos ? "" : line.substr(b, e - b + 1);
        if (!t.empty() && t[0] != '#') rows.push_back(t);
        line.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == ';') flush();
        else line += c;
    }
    flush();
    return from_rows(rows);
}

int Matrix01::ones() const { return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1)); }

Matrix01 Matrix01::transposed() const {
    Matrix01 t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix01 Matrix01::rotated() const {
    Matrix01 t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, rows_ - 1 - i, at(i, j));
    return t;
}

Matrix01 Matrix01::column_reversed() const {
    Matrix01 t(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(i, cols_ - 1 - j, at(i, j));
    return t;
}

std::string Matrix01::str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        if (i) s += ';';
        for (int j = 0; j < cols_; ++j) s += at(i, j) ? '1' : '0';
    }
    return s;
}

namespace {

// Columns of a matched greedily against the chosen rows.
bool columns_fit(const Matrix01& a, const Matrix01& b, const std::vector<int>& rows) {
    int col = 0;
    for (int j = 0; j < b.cols(); ++j, ++col) {
        for (;; ++col) {
            if (col >= a.cols()) return false;
            bool ok = true;
            for (int i = 0; i < b.rows() && ok; ++i)
                if (b.at(i, j) && !a.at(rows[static_cast<std::size_t>(i)], col)) ok = false;
            if (ok) break;
        }
    }
    return true;
}

bool choose_rows(const Matrix01& a, const Matrix01& b, std::vector<int>& rows, int next) {
    if (static_cast<int>(rows.size()) == b.rows()) return columns_fit(a, b, rows);
    const int i = static_cast<int>(rows.size());
    for (int r = next; r <= a.rows() - (b.rows() - i); ++r) {
        rows.push_back(r);
        bool ok = choose_rows(a, b, rows, r + 1);
        rows.pop_back();
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool contains_pattern(const Matrix01& a, const Matrix01& b) {
    if (b.rows() == 0 || b.all_zero()) throw Error("pattern matrix must contain a 1");
    if (b.rows() > a.rows() || b.cols() > a.cols()) return false;
    std::vector<int> rows;
    return choose_rows(a, b, rows, 0);
}

bool is_connected_matrix(const Matrix01& a) {
    const int n = a.rows(), m = a.cols();
    if (n == 0) return false;
    // Nodes 0..n-1 are rows, n..n+m-1 columns.
    std::vector<int> parent(static_cast<std::size_t>(n + m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int comps = n + m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (a.at(i, j)) {
                int x = find(i), y = find(n + j);
                if (x != y) {
                    parent[static_cast<std::size_t>(x)] = y;
                    --comps;
                }
            }
    return comps == 1;
}

bool is_light(const Matrix01& a) {
    for (int j = 0; j < a.cols(); ++j) {
        int c = 0;
        for (int i = 0; i < a.rows(); ++i) c += a.at(i, j);
        if (c != 1) return false;
    }
    return a.cols() > 0;
}

Matrix01 described_matrix(const Staircase& s, int rows, int cols) {
    if (s.positions.empty()) throw Error("staircase has no positions");
    Matrix01 m(rows, cols);
    for (std::size_t k = 0; k < s.positions.size(); ++k) {
        auto [i, j] = s.positions[k];
        if (i < 1 || i > rows || j < 1 || j > cols) throw Error("staircase leaves the matrix");
        if (k > 0) {
            auto [pi, pj] = s.positions[k - 1];
            if (!((i == pi + 1 && j == pj) || (i == pi && j == pj + 1))) throw Error("staircase step must raise one coordinate by one");
        }
        m.set(i - 1, j - 1);
    }
    auto [i1, j1] = s.positions.front();
    auto [it, jt] = s.positions.back();
    for (int j = 1; j < j1; ++j) m.set(i1 - 1, j - 1);
    for (int i = 1; i < i1; ++i) m.set(i - 1, j1 - 1);
    for (int j = jt + 1; j <= cols; ++j) m.set(it - 1, j - 1);
    for (int i = it + 1; i <= rows; ++i) m.set(i - 1, jt - 1);
    return m;
}

bool describes(const Staircase& s, const Matrix01& a) {
    try {
        return described_matrix(s, a.rows(), a.cols()) == (s.column_reversed ? a.column_reversed() : a);
    } catch (const Error&) {
        return false;
    }
}

namespace {

bool extend_staircase(const Matrix01& a, std::vector<std::pair<int, int>>& path, int t) {
    if (static_cast<int>(path.size()) == t) return described_matrix({path, false}, a.rows(), a.cols()) == a;
    auto [i, j] = path.back();
    const std::pair<int, int> steps[] = {{i, j + 1}, {i + 1, j}};
    for (auto [ni, nj] : steps) {
        if (ni > a.rows() || nj > a.cols() || !a.at(ni - 1, nj - 1)) continue;
        path.emplace_back(ni, nj);
        bool ok = extend_staircase(a, path, t);
        if (ok) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Staircase> staircase_certificate(const Matrix01& a) {
    if (a.rows() == 0 || a.all_zero()) throw Error("staircase test needs a 1 entry");
    // A described matrix is a spanning tree of rows and columns.
    if (a.ones() != a.rows() + a.cols() - 1) return std::nullopt;
    for (bool reversed : {false, true}) {
        const Matrix01 m = reversed ? a.column_reversed() : a;
        for (int t = 1; t <= m.rows() + m.cols() - 1; ++t)
            for (int i = 1; i <= m.rows(); ++i)
                for (int j = 1; j <= m.cols(); ++j) {
                    if (!m.at(i - 1, j - 1)) continue;
                    std::vector<std::pair<int, int>> path{{i, j}};
                    if (extend_staircase(m, path, t)) return Staircase{path, reversed};
                }
    }
    return std::nullopt;
}

Matrix01 elementary_op(const Matrix01& a, const Placement& p) {
    const bool horizontal = p.side == Boundary::Top || p.side == Boundary::Bottom;
    const int len = horizontal ? a.cols() : a.rows();
    if (p.offset < 0 || p.offset >= len) throw Error("placement offset out of range");
    int nr = a.rows() + (horizontal ? 1 : 0), nc = a.cols() + (horizontal ? 0 : 1);
    int di = p.side == Boundary::Top ? 1 : 0, dj = p.side == Boundary::Left ? 1 : 0;
    bool next_to_one = false;
    switch (p.side) {
        case Boundary::Top: next_to_one = a.at(0, p.offset); break;
        case Boundary::Bottom: next_to_one = a.at(a.rows() - 1, p.offset); break;
        case Boundary::Left: next_to_one = a.at(p.offset, 0); break;
        case Boundary::Right: next_to_one = a.at(p.offset, a.cols() - 1); break;
    }
    if (!next_to_one) throw Error("new 1 entry must sit next to an existing 1");
    Matrix01 out(nr, nc);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i + di, j + dj, a.at(i, j));
    switch (p.side) {
        case Boundary::Top: out.set(0, p.offset); break;
        case Boundary::Bottom: out.set(nr - 1, p.offset); break;
        case Boundary::Left: out.set(p.offset, 0); break;
        case Boundary::Right: out.set(p.offset, nc - 1); break;
    }
    return out;
}

namespace {

using Memo = std::map<Matrix01, std::optional<std::vector<Placement>>>;

Matrix01 drop_row(const Matrix01& a, int r) {
    Matrix01 out(a.rows() - 1, a.cols());
    for (int i = 0, k = 0; i < a.rows(); ++i) {
        if (i == r) continue;
        for (int j = 0; j < a.cols(); ++j) out.set(k, j, a.at(i, j));
        ++k;
    }
    return out;
}

// Single 1 position of row r, or -1.
int lone_one(const Matrix01& a, int r) {
    int at = -1;
    for (int j = 0; j < a.cols(); ++j)
        if (a.at(r, j)) {
            if (at >= 0) return -1;
            at = j;
        }
    return at;
}

const std::optional<std::vector<Placement>>& reach(const Matrix01& a, Memo& memo) {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::optional<std::vector<Placement>> out;
    if (a.rows() == 1 && a.cols() == 1) {
        if (a.at(0, 0)) out.emplace();
    } else {
        // Undo an operation: strip a boundary row (or column, via the
        // transpose) holding a single 1 next to another 1.
        for (Boundary side : {Boundary::Top, Boundary::Bottom, Boundary::Left, Boundary::Right}) {
            const bool horizontal = side == Boundary::Top || side == Boundary::Bottom;
            const Matrix01 m = horizontal ? a : a.transposed();
            if (m.rows() < 2) continue;
            const bool first = side == Boundary::Top || side == Boundary::Left;
            const int r = first ? 0 : m.rows() - 1;
            const int j = lone_one(m, r);
            if (j < 0 || !m.at(first ? 1 : m.rows() - 2, j)) continue;
            Matrix01 smaller = drop_row(m, r);
            if (!horizontal) smaller = smaller.transposed();
            const auto& sub = reach(smaller, memo);
            if (sub) {
                out = *sub;
                out->push_back({side, j});
                break;
            }
        }
    }
    return memo.emplace(a, std::move(out)).first->second;
}

}  // namespace

std::optional<std::vector<Placement>> reach_from_unit(const Matrix01& a) {
    Memo memo;
    return reach(a, memo);
}

const std::vector<Matrix01>& forbidden_family() {
    static const std::vector<Matrix01> family = [] {
        std::vector<Matrix01> f{Matrix01::parse("11;11")};
        for (Matrix01 m : {Matrix01::parse("110;101"), Matrix01::parse("110;101").transposed()})
            for (int k = 0; k < 4; ++k, m = m.rotated())
                if (std::find(f.begin(), f.end(), m) == f.end()) f.push_back(m);
        if (f.size() != 9) throw std::logic_error("obstruction family should have nine members");
        return f;
    }();
    return family;
}

MatrixVerdict classify_matrix(const Matrix01& a) {
    if (a.rows() == 0 || a.all_zero()) throw Error("cannot classify an all-zero matrix");
    if (!is_connected_matrix(a)) throw Error("matrix is not connected; only connected matrices are classified");
    MatrixVerdict v;
    v.staircase = staircase_certificate(a);
    if (v.staircase) return v;
    v.growth = GrowthClass::OmegaNLogN;
    for (const Matrix01& f : forbidden_family())
        if (contains_pattern(a, f)) {
            v.obstruction = f;
            break;
        }
    return v;
}

namespace {

class EexSearch {
public:
    EexSearch(int n, const Matrix01& b, const Budget& budget) : n_(n), b_(b), budget_(budget), cur_(n, n) {}

    MatrixResult run() {
        // Greedy lower bound, row-major.
        Matrix01 g(n_, n_);
        for (int k = 0; k < n_ * n_; ++k) {
            g.set(k / n_, k % n_);
            if (contains_pattern(g, b_)) g.set(k / n_, k % n_, false);
        }
        best_ = g;
        std::vector<int> open;
        for (int k = 0; k < n_ * n_; ++k)
            if (addable(k)) open.push_back(k);
        dfs(0, 0, open);
        return {best_.ones(), best_, aborted_ ? SearchStatus::LowerBoundOnly : SearchStatus::Exact, nodes_};
    }

private:
    bool addable(int k) {
        cur_.set(k / n_, k % n_);
        bool ok = !contains_pattern(cur_, b_);
        cur_.set(k / n_, k % n_, false);
        return ok;
    }

    bool out_of_budget() {
        if (budget_.nodes > 0 && nodes_ > budget_.nodes) return true;
        if (budget_.seconds > 0 && (nodes_ & 1023) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > budget_.seconds)
            return true;
        return false;
    }

    // `open` lists undecided cells that can still become 1, ascending.
    void dfs(int ones, std::size_t from, const std::vector<int>& open) {
        ++nodes_;
        if (aborted_ || out_of_budget()) {
            aborted_ = true;
            return;
        }
        if (ones > best_.ones()) best_ = cur_;
        if (from >= open.size() || ones + static_cast<int>(open.size() - from) <= best_.ones()) return;
        const int k = open[from];
        // Set k, then recompute which later cells remain addable.
        cur_.set(k / n_, k % n_);
        std::vector<int> next;
        for (std::size_t i = from + 1; i < open.size(); ++i)
            if (addable(open[i])) next.push_back(open[i]);
        if (ones + 1 + static_cast<int>(next.size()) > best_.ones()) dfs(ones + 1, 0, next);
        cur_.set(k / n_, k % n_, false);
        if (aborted_) return;
        dfs(ones, from + 1, open);
    }

    int n_;
    const Matrix01& b_;
    Budget budget_;
    Matrix01 cur_;
    Matrix01 best_;
    long long nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

MatrixResult eex_exact(int n, const Matrix01& b, const Budget& budget) {
    if (b.rows() == 0 || b.all_zero()) throw Error("pattern matrix must contain a 1");
    if (n < 1) throw Error("matrix size must be positive");
    return EexSearch(n, b, budget).run();
}

}  // namespace eog
