#include "torusham/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace torusham {

int GridLabeling::vertex_of_row(int i, int m) const {
    int s = static_cast<int>(row_start.size());
    long shift = 0;
    while (i < 0) {
        i += s;
        shift -= 1;
    }
    while (i >= s) {
        i -= s;
        shift += 1;
    }
    // vertical wrap shifts positions by sigma = -wrap_row.second / colscale,
    // which callers have already applied; here only normalize m
    (void)shift;
    m = ((m % row_len) + row_len) % row_len;
    return row_start[i] + m;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct NbrSpec {
    int to;
    double dx, dy;   // local geometric offset, only the angle matters
    long dR, dC;     // displacement in lift coordinates
};

struct Builder {
    int n;
    std::vector<std::vector<NbrSpec>> nbrs;
    explicit Builder(int n_) : n(n_), nbrs(n_) {}

    void add(int v, int to, double dx, double dy, long dR, long dC) {
        nbrs[v].push_back({to, dx, dy, dR, dC});
    }

    // sort each vertex's neighbors counter-clockwise by angle
    std::pair<std::vector<std::vector<int>>, std::vector<std::vector<std::pair<long, long>>>>
    finish() {
        std::vector<std::vector<int>> rot(n);
        std::vector<std::vector<std::pair<long, long>>> disp(n);
        for (int v = 0; v < n; ++v) {
            auto& lst = nbrs[v];
            std::stable_sort(lst.begin(), lst.end(), [](const NbrSpec& a, const NbrSpec& b) {
                return std::atan2(a.dy, a.dx) < std::atan2(b.dy, b.dx);
            });
            for (const auto& e : lst) {
                rot[v].push_back(e.to);
                disp[v].emplace_back(e.dR, e.dC);
            }
        }
        return {std::move(rot), std::move(disp)};
    }
};

void require(bool cond, const std::string& why) {
    if (!cond) throw MapError(MapErrorCode::InvalidParameters, why);
}

int imod(int a, int p) { return ((a % p) + p) % p; }

// ---------------------------------------------------------------- {3^3,4^2}
// Rows of r vertices; quadrangle bands between rows (2t,2t+1), triangle
// bands with up-right diagonals between rows (2t+1,2t+2). Top row glued to
// the bottom one shifted by k.
struct Gen33344 {
    int r, s, k;
    long n() const { return static_cast<long>(r) * s; }
    void check() const {
        require(r >= 3, "r must be >= 3");
        require(s >= 2 && s % 2 == 0, "s must be even and >= 2");
        require(k >= 0 && k < r, "k out of range");
    }
    int vid(int i, int m, long& dR, long& dC) const {
        dR = 0;
        dC = 0;
        if (i < 0) {
            i += s;
            m -= k;
            dR = -1;
        } else if (i >= s) {
            i -= s;
            m += k;
            dR = 1;
        }
        int mm = imod(m, r);
        dC = (m - mm) / r;
        return i * r + mm;
    }
    void build(Builder& b, GridLabeling& lab) const {
        auto edge = [&](int v, int i2, int m2, double dx, double dy, long lR, long lC) {
            long wR, wC;
            int u = vid(i2, m2, wR, wC);
            b.add(v, u, dx, dy, lR, lC);
        };
        for (int i = 0; i < s; ++i)
            for (int m = 0; m < r; ++m) {
                int v = i * r + m;
                lab.labels[v] = {Sublattice::Row, i, m, i, m};
                edge(v, i, m + 1, 1, 0, 0, 1);
                edge(v, i, m - 1, -1, 0, 0, -1);
                edge(v, i + 1, m, 0, 1, 1, 0);
                edge(v, i - 1, m, 0, -1, -1, 0);
                if (i % 2 == 1)
                    edge(v, i + 1, m + 1, 1, 1, 1, 1);
                else
                    edge(v, i - 1, m - 1, -1, -1, -1, -1);
            }
        lab.wrap_col = {0, r};
        lab.wrap_row = {s, -k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(i * r);
        lab.row_len = r;
    }
};

// --------------------------------------------------------------- {3^2,4,3,4}
// Rows of r vertices; every band mixes quadrangles and triangle pairs,
// alternating by column parity, with diagonal direction flipping per band.
struct Gen33434 {
    int r, s, k;
    long n() const { return static_cast<long>(r) * s; }
    void check() const {
        require(r >= 4 && r % 2 == 0, "r must be even and >= 4");
        require(s >= 2 && s % 2 == 0, "s must be even and >= 2");
        require(k >= 0 && k < r && k % 2 == 0, "k must be even and in range");
    }
    int vid(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= k;
        } else if (i >= s) {
            i -= s;
            m += k;
        }
        return i * r + imod(m, r);
    }
    void build(Builder& b, GridLabeling& lab) const {
        auto edge = [&](int v, int i2, int m2, double dx, double dy) {
            b.add(v, vid(i2, m2), dx, dy, static_cast<long>(dy == 0 ? 0 : (dy > 0 ? 1 : -1)),
                  static_cast<long>(std::lround(dx)));
        };
        for (int i = 0; i < s; ++i)
            for (int m = 0; m < r; ++m) {
                int v = i * r + m;
                lab.labels[v] = {Sublattice::Row, i, m, i, m};
                edge(v, i, m + 1, 1, 0);
                edge(v, i, m - 1, -1, 0);
                edge(v, i + 1, m, 0, 1);
                edge(v, i - 1, m, 0, -1);
                if (m % 2 == 1) {
                    if (i % 2 == 0)
                        edge(v, i + 1, m - 1, -1, 1);
                    else
                        edge(v, i + 1, m + 1, 1, 1);
                } else {
                    if (i % 2 == 1)
                        edge(v, i - 1, m + 1, 1, -1);
                    else
                        edge(v, i - 1, m - 1, -1, -1);
                }
            }
        lab.wrap_col = {0, r};
        lab.wrap_row = {s, -k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(i * r);
        lab.row_len = r;
    }
};

// ----------------------------------------------------------------- {6,3,6,3}
// Kagome: full rows of r vertices alternating with apex rows of r/2. An
// apex a(i,j) joins (i,2j),(i,2j+1) below and (i+1,2j-1),(i+1,2j) above.
struct Gen3636 {
    int r, s, k;
    long n() const { return 3L * r * s / 2; }
    void check() const {
        require(r >= 4 && r % 2 == 0, "r must be even and >= 4");
        require(s >= 1, "s must be >= 1");
        // an odd shift would put both triangles at a seam vertex on the same
        // side, breaking the alternating (6,3,6,3) sequence
        require(k >= 0 && k < r && k % 2 == 0, "k must be even and in range");
    }
    int base(int i) const { return i * (3 * r / 2); }
    int row_id(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= k;
        } else if (i >= s) {
            i -= s;
            m += k;
        }
        return base(i) + imod(m, r);
    }
    int apex_id(int i, int j) const { return base(imod(i, s)) + r + imod(j, r / 2); }
    // apex of band i-1 whose upper attachment is row-i position m; the side
    // the apex hangs on depends on the attachment parity, which the seam
    // shift can flip
    std::pair<int, bool> apex_below(int i, int m) const {
        int band = i - 1, mm = m;
        if (band < 0) {
            band += s;
            mm -= k;
        }
        mm = imod(mm, r);
        bool right_attach = (mm % 2 == 0); // vertex is the apex's up-right nbr
        int j = right_attach ? mm / 2 : (mm + 1) / 2;
        return {apex_id(band, j), right_attach};
    }
    void build(Builder& b, GridLabeling& lab) const {
        const int half = r / 2;
        for (int i = 0; i < s; ++i) {
            for (int m = 0; m < r; ++m) {
                int v = base(i) + m;
                lab.labels[v] = {Sublattice::Row, i, m, 2L * i, 2L * m};
                b.add(v, row_id(i, m + 1), 2, 0, 0, 2);
                b.add(v, row_id(i, m - 1), -2, 0, 0, -2);
                if (m % 2 == 0)
                    b.add(v, apex_id(i, m / 2), 1, 1, 1, 1);
                else
                    b.add(v, apex_id(i, (m - 1) / 2), -1, 1, 1, -1);
                auto [below, right_attach] = apex_below(i, m);
                if (right_attach)
                    b.add(v, below, -1, -1, -1, 1);
                else
                    b.add(v, below, 1, -1, -1, 3);
            }
            for (int j = 0; j < half; ++j) {
                int a = base(i) + r + j;
                lab.labels[a] = {Sublattice::Apex, i, j, 2L * i + 1, 4L * j + 1};
                b.add(a, row_id(i, 2 * j), -1, -1, -1, -1);
                b.add(a, row_id(i, 2 * j + 1), 1, -1, -1, 1);
                b.add(a, row_id(i + 1, 2 * j), 1, 1, 1, -1);
                b.add(a, row_id(i + 1, 2 * j - 1), -1, 1, 1, -3);
            }
        }
        lab.wrap_col = {0, 2L * r};
        lab.wrap_row = {2L * s, -2L * k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(base(i));
        lab.row_len = r;
    }
};

// ------------------------------------------------------------------ {3^4,6}
// Snub-style rows of r vertices (period 3); hexagon bands between rows
// (2t+1,2t+2), all-triangle bands between rows (2t,2t+1).
struct Gen33336 {
    int r, s, k;
    long n() const { return static_cast<long>(r) * s; }
    void check() const {
        require(r >= 3 && r % 3 == 0, "r must be a positive multiple of 3");
        require(s >= 2 && s % 2 == 0, "s must be even and >= 2");
        require(k >= 0 && k < r && k % 3 == 0, "k must be a multiple of 3 in range");
    }
    int vid(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= k;
        } else if (i >= s) {
            i -= s;
            m += k;
        }
        return i * r + imod(m, r);
    }
    void build(Builder& b, GridLabeling& lab) const {
        auto edge = [&](int v, int i2, int m2, double dx, double dy, long dR, long dC) {
            b.add(v, vid(i2, m2), dx, dy, dR, dC);
        };
        for (int i = 0; i < s; ++i)
            for (int m = 0; m < r; ++m) {
                int v = i * r + m;
                lab.labels[v] = {Sublattice::Row, i, m, i, m};
                int c = m % 3;
                if (i % 2 == 0) {
                    if (c == 0) {
                        edge(v, i, m + 1, 1, -1, 0, 1);
                        edge(v, i, m - 1, -1, -1, 0, -1);
                        edge(v, i + 1, m - 1, -2, 2, 1, -1);
                        edge(v, i + 1, m, 0, 2, 1, 0);
                        edge(v, i + 1, m + 1, 1, 1, 1, 1);
                    } else if (c == 1) {
                        edge(v, i, m + 1, 2, 0, 0, 1);
                        edge(v, i, m - 1, -1, 1, 0, -1);
                        edge(v, i + 1, m, 0, 2, 1, 0);
                        edge(v, i - 1, m + 1, 0, -2, -1, 1);
                        edge(v, i - 1, m + 2, 2, -2, -1, 2);
                    } else {
                        edge(v, i, m + 1, 1, 1, 0, 1);
                        edge(v, i, m - 1, -2, 0, 0, -1);
                        edge(v, i + 1, m - 1, -2, 2, 1, -1);
                        edge(v, i + 1, m, -1, 3, 1, 0);
                        edge(v, i - 1, m + 1, 0, -2, -1, 1);
                    }
                } else {
                    if (c == 0) {
                        edge(v, i, m + 1, 1, -1, 0, 1);
                        edge(v, i, m - 1, -2, 0, 0, -1);
                        edge(v, i + 1, m - 2, -2, 2, 1, -2);
                        edge(v, i + 1, m - 1, 0, 2, 1, -1);
                        edge(v, i - 1, m, 0, -2, -1, 0);
                    } else if (c == 1) {
                        edge(v, i, m + 1, 1, 1, 0, 1);
                        edge(v, i, m - 1, -1, 1, 0, -1);
                        edge(v, i - 1, m - 1, -1, 0, -1, -1);
                        edge(v, i - 1, m, 0, -1, -1, 0);
                        edge(v, i - 1, m + 1, 2, -1, -1, 1);
                    } else {
                        edge(v, i, m + 1, 2, 0, 0, 1);
                        edge(v, i, m - 1, -1, -1, 0, -1);
                        edge(v, i + 1, m - 1, 0, 2, 1, -1);
                        edge(v, i - 1, m, 1, -2, -1, 0);
                        edge(v, i - 1, m + 1, 2, -1, -1, 1);
                    }
                }
            }
        lab.wrap_col = {0, r};
        lab.wrap_row = {s, -k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(i * r);
        lab.row_len = r;
    }
};

// ------------------------------------------------------------------ {4,8,8}
// Rows are the period-4 octagon/square meanders; each vertex carries one
// vertical edge, up for positions 0,1 (mod 4) and down for 2,3.
struct Gen488 {
    int r, s, k;
    long n() const { return static_cast<long>(r) * s; }
    void check() const {
        require(r >= 4 && r % 4 == 0, "r must be a positive multiple of 4");
        require(s >= 1, "s must be >= 1");
        require(k >= 0 && k < r && k % 4 == 0, "k must be a multiple of 4 in range");
    }
    int vid(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= k;
        } else if (i >= s) {
            i -= s;
            m += k;
        }
        return i * r + imod(m, r);
    }
    void build(Builder& b, GridLabeling& lab) const {
        auto edge = [&](int v, int i2, int m2, double dx, double dy, long dR, long dC) {
            b.add(v, vid(i2, m2), dx, dy, dR, dC);
        };
        for (int i = 0; i < s; ++i)
            for (int m = 0; m < r; ++m) {
                int v = i * r + m;
                lab.labels[v] = {Sublattice::Row, i, m, i, m};
                switch (m % 4) {
                    case 0:
                        edge(v, i, m - 1, -2, 0, 0, -1);
                        edge(v, i, m + 1, 1, -1, 0, 1);
                        edge(v, i + 1, m + 2, 1, 1, 1, 2);
                        break;
                    case 1:
                        edge(v, i, m - 1, -1, 1, 0, -1);
                        edge(v, i, m + 1, 0, -2, 0, 1);
                        edge(v, i + 1, m + 2, 1, 1, 1, 2);
                        break;
                    case 2:
                        edge(v, i, m - 1, 0, 2, 0, -1);
                        edge(v, i, m + 1, 1, -1, 0, 1);
                        edge(v, i - 1, m - 2, -1, -1, -1, -2);
                        break;
                    default:
                        edge(v, i, m - 1, -1, 1, 0, -1);
                        edge(v, i, m + 1, 2, 0, 0, 1);
                        edge(v, i - 1, m - 2, -1, -1, -1, -2);
                        break;
                }
            }
        lab.wrap_col = {0, r};
        lab.wrap_row = {s, -k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(i * r);
        lab.row_len = r;
    }
};

// ---------------------------------------------------------------- {3,12,12}
// Bands of twelve-gons: per band a row of r vertices (bottom arcs, four per
// twelve-gon), plus r/4 vertical pairs (lower,upper) between consecutive
// twelve-gons. Consecutive bands are brick-shifted by one position, and the
// representation's k counts positions along the base row as in the paper,
// so the internal shift is k+1.
struct Gen31212 {
    int r, s, k;
    long n() const { return 3L * r * s / 2; }
    int bcount() const { return r / 4; }
    void check() const {
        require(r >= 8 && r % 4 == 0, "r must be a multiple of 4 and >= 8");
        require(s >= 1, "s must be >= 1");
        require(k >= 0 && k < r, "k out of range");
        require(imod(k, 4) == imod(s - 1, 4), "k must be congruent to s-1 mod 4");
    }
    int sigma() const { return imod(k + 1, r); }
    int base(int i) const { return i * (3 * r / 2); }
    int row_id(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= sigma();
        } else if (i >= s) {
            i -= s;
            m += sigma();
        }
        return base(i) + imod(m, r);
    }
    int lower_id(int i, int j) const { return base(imod(i, s)) + r + imod(j, bcount()); }
    int upper_id(int i, int j) const { return base(imod(i, s)) + r + bcount() + imod(j, bcount()); }
    // upper pair vertex of band i-1 attached to row-i position m; which is 1
    // for the up-left attachment (4j-band) and 2 for the up-right (4j-band+1)
    int upper_below(int i, int m, int which) const {
        int band = i - 1, mm = m;
        if (band < 0) {
            band += s;
            mm -= sigma();
        }
        mm = imod(mm, r);
        int j = imod(mm + band - which + 1, r) / 4;
        return upper_id(band, j);
    }
    void build(Builder& b, GridLabeling& lab) const {
        const int B = bcount();
        for (int i = 0; i < s; ++i) {
            for (int m = 0; m < r; ++m) {
                int v = base(i) + m;
                lab.labels[v] = {Sublattice::Row, i, m, 3L * i, 2L * m};
                int phi = imod(m + i, 4);
                switch (phi) {
                    case 0:
                        b.add(v, row_id(i, m + 1), 1.2, -1, 0, 2);
                        b.add(v, row_id(i, m - 1), -1.6, 0, 0, -2);
                        b.add(v, lower_id(i, (m + i) / 4), -0.3, 1, 1, -1);
                        break;
                    case 1:
                        b.add(v, row_id(i, m + 1), 1.7, 0, 0, 2);
                        b.add(v, row_id(i, m - 1), -1.2, 1, 0, -2);
                        b.add(v, upper_below(i, m, 1), 0.5, -1, -1, -1);
                        break;
                    case 2:
                        b.add(v, row_id(i, m + 1), 1.2, 1, 0, 2);
                        b.add(v, row_id(i, m - 1), -1.7, 0, 0, -2);
                        b.add(v, upper_below(i, m, 2), -0.5, -1, -1, -3);
                        break;
                    default:
                        b.add(v, row_id(i, m + 1), 0.9, 0, 0, 2);
                        b.add(v, row_id(i, m - 1), -1.2, -1, 0, -2);
                        b.add(v, lower_id(i, (m + i + 1) / 4), 0.6, 1, 1, 1);
                        break;
                }
            }
            for (int j = 0; j < B; ++j) {
                int lo = base(i) + r + j;
                int up = base(i) + r + B + j;
                long pcol = 2L * (4 * j - i) - 1;
                lab.labels[lo] = {Sublattice::PairLower, i, j, 3L * i + 1, pcol};
                lab.labels[up] = {Sublattice::PairUpper, i, j, 3L * i + 2, pcol};
                b.add(lo, up, 0, 1, 1, 0);
                b.add(lo, row_id(i, 4 * j - 1 - i), -1.3, -1, -1, -1);
                b.add(lo, row_id(i, 4 * j - i), 0.3, -1, -1, 1);
                b.add(up, lo, 0, -1, -1, 0);
                b.add(up, row_id(i + 1, 4 * j - i), -0.5, 1, 1, 1);
                b.add(up, row_id(i + 1, 4 * j - i + 1), 0.5, 1, 1, 3);
            }
        }
        lab.wrap_col = {0, 2L * r};
        lab.wrap_row = {3L * s, -2L * sigma()};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(base(i));
        lab.row_len = r;
    }
};

// ------------------------------------------------------------------ {4,6,12}
// Lines of twelve-gons; each line carries two rows of r vertices, the lower
// arcs (even rows) and the upper arcs (odd rows), six vertices per
// twelve-gon, bridged by squares within and between lines.
struct Gen4612 {
    int r, s, k;
    long n() const { return static_cast<long>(r) * s; }
    void check() const {
        require(r >= 6 && r % 6 == 0, "r must be a positive multiple of 6");
        require(s >= 2 && s % 2 == 0, "s must be even and >= 2");
        require(k >= 0 && k < r && k % 6 == 0, "k must be a multiple of 6 in range");
    }
    int vid(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= k;
        } else if (i >= s) {
            i -= s;
            m += k;
        }
        return i * r + imod(m, r);
    }
    void build(Builder& b, GridLabeling& lab) const {
        const double D = 2.0 * (std::cos(kPi / 12) + std::sin(kPi / 12));
        auto corner = [&](int t) {
            double a = (15.0 + 30.0 * t) * kPi / 180.0;
            return std::pair<double, double>(std::cos(a), std::sin(a));
        };
        const std::pair<double, double> A{D, 0.0};
        const std::pair<double, double> Bv{D / 2, D * std::sqrt(3.0) / 2};
        auto edge = [&](int v, int i2, int m2, std::pair<double, double> tgt,
                        std::pair<double, double> src, std::pair<double, double> off, long dR,
                        long dC) {
            b.add(v, vid(i2, m2), tgt.first + off.first - src.first,
                  tgt.second + off.second - src.second, dR, dC);
        };
        const std::pair<double, double> O{0, 0};
        for (int i = 0; i < s; ++i)
            for (int m = 0; m < r; ++m) {
                int v = i * r + m;
                lab.labels[v] = {Sublattice::Row, i, m, i, m};
                int c = m % 6;
                if (i % 2 == 0) { // lower arc, corners t = c+6
                    int t = c + 6;
                    if (c > 0)
                        edge(v, i, m - 1, corner(t - 1), corner(t), O, 0, -1);
                    else
                        edge(v, i, m - 1, corner(11), corner(6), {-D, 0}, 0, -1);
                    if (c < 5)
                        edge(v, i, m + 1, corner(t + 1), corner(t), O, 0, 1);
                    else
                        edge(v, i, m + 1, corner(6), corner(11), A, 0, 1);
                    switch (c) {
                        case 0: edge(v, i + 1, m, corner(5), corner(6), O, 1, 0); break;
                        case 5: edge(v, i + 1, m, corner(0), corner(11), O, 1, 0); break;
                        case 1:
                            edge(v, i - 1, m + 2, corner(2), corner(7), {-Bv.first, -Bv.second},
                                 -1, 2);
                            break;
                        case 2:
                            edge(v, i - 1, m + 2, corner(1), corner(8), {-Bv.first, -Bv.second},
                                 -1, 2);
                            break;
                        case 3:
                            edge(v, i - 1, m + 4, corner(4), corner(9),
                                 {A.first - Bv.first, A.second - Bv.second}, -1, 4);
                            break;
                        default:
                            edge(v, i - 1, m + 4, corner(3), corner(10),
                                 {A.first - Bv.first, A.second - Bv.second}, -1, 4);
                            break;
                    }
                } else { // upper arc, corners t = 5-c
                    int t = 5 - c;
                    if (c > 0)
                        edge(v, i, m - 1, corner(t + 1), corner(t), O, 0, -1);
                    else
                        edge(v, i, m - 1, corner(0), corner(5), {-D, 0}, 0, -1);
                    if (c < 5)
                        edge(v, i, m + 1, corner(t - 1), corner(t), O, 0, 1);
                    else
                        edge(v, i, m + 1, corner(5), corner(0), A, 0, 1);
                    switch (c) {
                        case 0: edge(v, i - 1, m, corner(6), corner(5), O, -1, 0); break;
                        case 5: edge(v, i - 1, m, corner(11), corner(0), O, -1, 0); break;
                        case 3: edge(v, i + 1, m - 2, corner(7), corner(2), Bv, 1, -2); break;
                        case 4: edge(v, i + 1, m - 2, corner(8), corner(1), Bv, 1, -2); break;
                        case 1:
                            edge(v, i + 1, m - 4, corner(9), corner(4),
                                 {Bv.first - A.first, Bv.second - A.second}, 1, -4);
                            break;
                        default:
                            edge(v, i + 1, m - 4, corner(10), corner(3),
                                 {Bv.first - A.first, Bv.second - A.second}, 1, -4);
                            break;
                    }
                }
            }
        lab.wrap_col = {0, r};
        lab.wrap_row = {s, -k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(i * r);
        lab.row_len = r;
    }
};

// ------------------------------------------------------------------ {6,4,3,4}
// Lines of hexagons; each line carries a bottom-arc row and a top-arc row,
// three vertices per hexagon, with squares across hexagon edges and
// triangles at the triple points.
struct Gen6434 {
    int r, s, k;
    long n() const { return static_cast<long>(r) * s; }
    void check() const {
        require(r >= 3 && r % 3 == 0, "r must be a positive multiple of 3");
        require(s >= 2 && s % 2 == 0, "s must be even and >= 2");
        require(k >= 0 && k < r && k % 3 == 0, "k must be a multiple of 3 in range");
    }
    int vid(int i, int m) const {
        if (i < 0) {
            i += s;
            m -= k;
        } else if (i >= s) {
            i -= s;
            m += k;
        }
        return i * r + imod(m, r);
    }
    void build(Builder& b, GridLabeling& lab) const {
        const double D = 1.0 + std::sqrt(3.0);
        auto corner = [&](double deg) {
            double a = deg * kPi / 180.0;
            return std::pair<double, double>(std::cos(a), std::sin(a));
        };
        const std::pair<double, double> A{D, 0.0};
        const std::pair<double, double> B60{D / 2, D * std::sqrt(3.0) / 2};
        const std::pair<double, double> O{0, 0};
        auto edge = [&](int v, int i2, int m2, std::pair<double, double> tgt, double src_deg,
                        std::pair<double, double> off, long dR, long dC) {
            auto src = corner(src_deg);
            b.add(v, vid(i2, m2), tgt.first + off.first - src.first,
                  tgt.second + off.second - src.second, dR, dC);
        };
        const double bot[3] = {210, 270, 330};
        const double top[3] = {150, 90, 30};
        for (int i = 0; i < s; ++i)
            for (int m = 0; m < r; ++m) {
                int v = i * r + m;
                lab.labels[v] = {Sublattice::Row, i, m, i, m};
                int c = m % 3;
                if (i % 2 == 0) {
                    double a = bot[c];
                    if (c > 0)
                        edge(v, i, m - 1, corner(bot[c - 1]), a, O, 0, -1);
                    else
                        edge(v, i, m - 1, corner(330), a, {-D, 0}, 0, -1);
                    if (c < 2)
                        edge(v, i, m + 1, corner(bot[c + 1]), a, O, 0, 1);
                    else
                        edge(v, i, m + 1, corner(210), a, A, 0, 1);
                    switch (c) {
                        case 0:
                            edge(v, i + 1, m, corner(150), a, O, 1, 0);
                            edge(v, i - 1, m + 1, corner(90), a, {-B60.first, -B60.second}, -1, 1);
                            break;
                        case 1:
                            edge(v, i - 1, m + 1, corner(30), a, {-B60.first, -B60.second}, -1, 1);
                            edge(v, i - 1, m + 2, corner(150), a,
                                 {A.first - B60.first, A.second - B60.second}, -1, 2);
                            break;
                        default:
                            edge(v, i + 1, m, corner(30), a, O, 1, 0);
                            edge(v, i - 1, m + 2, corner(90), a,
                                 {A.first - B60.first, A.second - B60.second}, -1, 2);
                            break;
                    }
                } else {
                    double a = top[c];
                    if (c > 0)
                        edge(v, i, m - 1, corner(top[c - 1]), a, O, 0, -1);
                    else
                        edge(v, i, m - 1, corner(30), a, {-D, 0}, 0, -1);
                    if (c < 2)
                        edge(v, i, m + 1, corner(top[c + 1]), a, O, 0, 1);
                    else
                        edge(v, i, m + 1, corner(150), a, A, 0, 1);
                    switch (c) {
                        case 0:
                            edge(v, i - 1, m, corner(210), a, O, -1, 0);
                            edge(v, i + 1, m - 2, corner(270), a,
                                 {B60.first - A.first, B60.second - A.second}, 1, -2);
                            break;
                        case 1:
                            edge(v, i + 1, m - 2, corner(330), a,
                                 {B60.first - A.first, B60.second - A.second}, 1, -2);
                            edge(v, i + 1, m - 1, corner(210), a, B60, 1, -1);
                            break;
                        default:
                            edge(v, i - 1, m, corner(330), a, O, -1, 0);
                            edge(v, i + 1, m - 1, corner(270), a, B60, 1, -1);
                            break;
                    }
                }
            }
        lab.wrap_col = {0, r};
        lab.wrap_row = {s, -k};
        for (int i = 0; i < s; ++i) lab.row_start.push_back(i * r);
        lab.row_len = r;
    }
};

template <typename G>
std::pair<ToroidalMap, GridLabeling> run(const FaceSequenceType& type, G gen) {
    gen.check();
    long n = gen.n();
    require(n >= 3 && n <= 100000, "instance size out of supported range");
    Builder b(static_cast<int>(n));
    GridLabeling lab;
    lab.rep = {type, gen.r, gen.s, gen.k};
    lab.labels.resize(n);
    gen.build(b, lab);
    auto [rot, disp] = b.finish();
    try {
        ToroidalMap m = ToroidalMap::build(static_cast<int>(n), rot, type);
        lab.dart_disp = std::move(disp);
        return {std::move(m), std::move(lab)};
    } catch (const MapError& e) {
        if (e.code == MapErrorCode::InvalidParameters) throw;
        // the identification degenerated for these parameters
        throw MapError(MapErrorCode::InvalidParameters,
                       std::string("identification degenerates: ") + e.what());
    }
}

} // namespace

std::pair<ToroidalMap, GridLabeling> generate(const FaceSequenceType& type, int r, int s, int k) {
    if (type == type_33344()) return run(type, Gen33344{r, s, k});
    if (type == type_33434()) return run(type, Gen33434{r, s, k});
    if (type == type_3636()) return run(type, Gen3636{r, s, k});
    if (type == type_33336()) return run(type, Gen33336{r, s, k});
    if (type == type_488()) return run(type, Gen488{r, s, k});
    if (type == type_31212()) return run(type, Gen31212{r, s, k});
    if (type == type_4612()) return run(type, Gen4612{r, s, k});
    if (type == type_6434()) return run(type, Gen6434{r, s, k});
    throw MapError(MapErrorCode::InvalidParameters, "unsupported type " + type.str());
}

long vertex_count(const FaceSequenceType& type, long r, long s) {
    if (type == type_3636() || type == type_31212()) return 3 * r * s / 2;
    return r * s;
}

std::vector<std::tuple<int, int, int>> admissible_parameters(const FaceSequenceType& type,
                                                             int max_n) {
    std::vector<std::tuple<int, int, int>> out;
    for (int rr = 3; rr <= max_n; ++rr) {
        for (int ss = 1; static_cast<long>(vertex_count(type, rr, ss)) <= max_n; ++ss) {
            if (vertex_count(type, rr, ss) < 3) continue;
            for (int kk = 0; kk < rr; ++kk) {
                try {
                    generate(type, rr, ss, kk);
                } catch (const MapError&) {
                    continue;
                }
                out.emplace_back(rr, ss, kk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace torusham
