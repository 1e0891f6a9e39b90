#include "dnq/oracle.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

namespace dnq {

namespace {

// ---- exact rational elimination --------------------------------------------

using RatMat = std::vector<std::vector<Rat>>;

RatMat to_rat(const Mat& m) {
    RatMat r(m.rows, std::vector<Rat>(m.cols, Rat(0)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i][j] = Rat(m.at(i, j));
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rational_rank(const Mat& m) {
    RatMat r = to_rat(m);
    return static_cast<int>(rref(r).size());
}

std::vector<Int> clear_to_primitive(const std::vector<Rat>& v) {
    Int l = 1;
    for (auto& x : v) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
    std::vector<Int> out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = Int(boost::multiprecision::numerator(v[i])) * (l / Int(boost::multiprecision::denominator(v[i])));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    for (auto& x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

// Primitive integer basis of the kernel of m (columns of m index unknowns).
std::vector<std::vector<Int>> kernel_basis(const Mat& m) {
    RatMat r = to_rat(m);
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Int>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
        basis.push_back(clear_to_primitive(v));
    }
    return basis;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// ---- arithmetic mod p -------------------------------------------------------

long p_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long quot = r / newr;
        long tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    return (t % p + p) % p;
}

using PVec = std::vector<long>;
using PMat = std::vector<PVec>;

int p_rank(PMat m, long p) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        long inv = p_inv(m[row][col], p);
        for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] % p == 0) continue;
            long f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
        }
        ++row;
    }
    return static_cast<int>(row);
}

PMat p_kernel(PMat m, long p, int cols) {
    size_t rows = m.size();
    std::vector<int> pivots;
    size_t row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        long inv = p_inv(m[row][col], p);
        for (int j = 0; j < cols; ++j) m[row][j] = m[row][j] * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] % p == 0) continue;
            long f = m[i][col];
            for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    PMat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        PVec v(cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][free] % p) % p;
        basis.push_back(v);
    }
    return basis;
}

PMat mat_mod(const Mat& m, long p) {
    PMat r(m.rows, PVec(m.cols, 0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Int v = m.at(i, j) % p;
            if (v < 0) v += p;
            r[i][j] = v.convert_to<long>();
        }
    return r;
}

PVec apply_mod(const Mat& m, const PVec& x, long p) {
    PVec y(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * x[j];
        Int v = acc % p;
        if (v < 0) v += p;
        y[i] = v.convert_to<long>();
    }
    return y;
}

// Row space kept in elimination form for membership tests.
struct PSpan {
    long p;
    int width;
    PMat rows;            // reduced rows
    std::vector<int> pivots;

    PSpan(long prime, int w) : p(prime), width(w) {}
    int dim() const { return static_cast<int>(rows.size()); }

    // Reduce v against the span; returns the residual.
    PVec reduce(PVec v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            long f = v[pivots[i]] % p;
            if (f == 0) continue;
            for (int j = 0; j < width; ++j) v[j] = ((v[j] - f * rows[i][j]) % p + p) % p;
        }
        return v;
    }
    bool contains(const PVec& v) const {
        PVec r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
    }
    // Returns false if v was already in the span.
    bool add(PVec v) {
        v = reduce(v);
        int piv = -1;
        for (int j = 0; j < width; ++j)
            if (v[j] % p != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        long inv = p_inv(v[piv], p);
        for (int j = 0; j < width; ++j) v[j] = v[j] * inv % p;
        rows.push_back(v);
        pivots.push_back(piv);
        return true;
    }
};

// Functionals vanishing exactly on the span of `rows` in F_p^width.
PMat annihilator(const PMat& rows, long p, int width) {
    if (rows.empty()) {
        PMat id;
        for (int i = 0; i < width; ++i) {
            PVec v(width, 0);
            v[i] = 1;
            id.push_back(v);
        }
        return id;
    }
    return p_kernel(rows, p, width);
}

std::vector<long> prime_pool() {
    std::vector<long> primes;
    for (long n = 2; n < 200; ++n) {
        bool ok = true;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                ok = false;
                break;
            }
        if (ok) primes.push_back(n);
    }
    return primes;
}

// Vertex order for the subspace enumeration: outer arms first, inner chain
// from the junction downward.
std::vector<VarId> enumeration_order(const QuiverDn& q) {
    std::vector<VarId> order{VarId::a(), VarId::b(), VarId::c(), VarId::d()};
    for (int i = q.n() - 4; i >= 0; --i) order.push_back(VarId::inner(i));
    return order;
}

struct PointCounter {
    const QuiverDn& q;
    const MatrixRep& m;
    const DimVec& e;
    long p;
    std::optional<VarId> surjective_at;

    std::vector<VarId> order;
    std::map<VarId, PSpan> chosen;
    Int total = 0;

    PointCounter(const QuiverDn& qq, const MatrixRep& mm, const DimVec& ee, long pp)
        : q(qq), m(mm), e(ee), p(pp), order(enumeration_order(qq)) {}

    void run() {
        for (VarId v : order)
            if (e.at(v) < 0 || e.at(v) > m.dims.at(v)) return;
        descend(0);
    }

    void descend(size_t idx) {
        if (idx == order.size()) {
            if (surjective_at) {
                VarId s = *surjective_at;
                PSpan image(p, m.dims.at(s));
                for (auto& ar : q.arrows()) {
                    if (ar.target != s) continue;
                    const Mat& mat = m.maps.at(ar.edge);
                    for (auto& row : chosen.at(ar.source).rows) image.add(apply_mod(mat, row, p));
                }
                if (image.dim() != e.at(s)) return;
            }
            total += 1;
            return;
        }
        VarId v = order[idx];
        const int amb = m.dims.at(v);
        const int ev = e.at(v);

        // Lower bound: images of already-chosen sources.
        PSpan lower(p, amb);
        for (auto& ar : q.arrows()) {
            if (ar.target != v || !chosen.count(ar.source)) continue;
            const Mat& mat = m.maps.at(ar.edge);
            for (auto& row : chosen.at(ar.source).rows) lower.add(apply_mod(mat, row, p));
        }
        // Upper bound: preimages of already-chosen targets, as a check stack.
        PMat checks;
        for (auto& ar : q.arrows()) {
            if (ar.source != v || !chosen.count(ar.target)) continue;
            const Mat& mat = m.maps.at(ar.edge);
            PMat ann = annihilator(chosen.at(ar.target).rows, p, m.dims.at(ar.target));
            PMat pm = mat_mod(mat, p);
            for (auto& functional : ann) {
                PVec row(amb, 0);
                for (int j = 0; j < amb; ++j) {
                    long acc = 0;
                    for (int i = 0; i < m.dims.at(ar.target); ++i)
                        acc = (acc + functional[i] * pm[i][j]) % p;
                    row[j] = acc;
                }
                checks.push_back(row);
            }
        }
        PMat upper_basis = checks.empty() ? annihilator(PMat{}, p, amb) : p_kernel(checks, p, amb);

        PSpan upper(p, amb);
        for (auto& row : upper_basis) upper.add(row);
        for (auto& row : lower.rows)
            if (!upper.contains(row)) return;
        const int lo = lower.dim(), hi = upper.dim();
        if (ev < lo || ev > hi) return;

        // Complement of lower inside upper.
        PMat comp;
        {
            PSpan probe = lower;
            for (auto& row : upper.rows)
                if (probe.add(row)) comp.push_back(probe.rows.back());
        }
        // Enumerate RREF matrices of size (ev-lo) x (hi-lo) in quotient coords.
        enumerate_rref(ev - lo, hi - lo, [&](const PMat& rr) {
            PSpan candidate = lower;
            for (auto& row : rr) {
                PVec vec(amb, 0);
                for (int t = 0; t < hi - lo; ++t) {
                    if (row[t] == 0) continue;
                    for (int j = 0; j < amb; ++j) vec[j] = (vec[j] + row[t] * comp[t][j]) % p;
                }
                candidate.add(vec);
            }
            if (candidate.dim() != ev) return;  // not expected
            chosen.emplace(v, candidate);
            descend(idx + 1);
            chosen.erase(v);
        });
    }

    void enumerate_rref(int k, int d, const std::function<void(const PMat&)>& fn) {
        if (k == 0) {
            fn(PMat{});
            return;
        }
        if (k > d) return;
        std::vector<int> pivots(k);
        PMat rows(k, PVec(d, 0));
        auto fill = [&](auto&& self, int row, int col) -> void {
            if (row == k) {
                fill_free(rows, pivots, 0, 0, fn);
                return;
            }
            for (int c = col; c <= d - (k - row); ++c) {
                pivots[row] = c;
                self(self, row + 1, c + 1);
            }
        };
        fill(fill, 0, 0);
    }

    void fill_free(PMat& rows, const std::vector<int>& pivots, int row, int col,
                   const std::function<void(const PMat&)>& fn) {
        int k = static_cast<int>(pivots.size());
        int d = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        if (row == k) {
            fn(rows);
            return;
        }
        if (col == d) {
            fill_free(rows, pivots, row + 1, 0, fn);
            return;
        }
        bool is_pivot_col = false;
        for (int i = 0; i < k; ++i)
            if (pivots[i] == col) is_pivot_col = true;
        if (col < pivots[row] || is_pivot_col) {
            rows[row][col] = col == pivots[row] ? 1 : 0;
            fill_free(rows, pivots, row, col + 1, fn);
            return;
        }
        for (long val = 0; val < p; ++val) {
            rows[row][col] = val;
            fill_free(rows, pivots, row, col + 1, fn);
        }
        rows[row][col] = 0;
    }
};

}  // namespace

std::string MatrixRep::to_json() const {
    nlohmann::json doc;
    doc["dims"] = nlohmann::json::parse(dims.to_json());
    doc["maps"] = nlohmann::json::object();
    for (auto& [e, mat] : maps) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < mat.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < mat.cols; ++j) row.push_back(mat.at(i, j).str());
            rows.push_back(row);
        }
        doc["maps"][e.name()] = rows;
    }
    return doc.dump();
}

MatrixRep MatrixRep::from_json(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    MatrixRep rep;
    rep.dims = DimVec::from_json(doc.at("dims").dump());
    for (auto& [name, rows] : doc.at("maps").items()) {
        int r = static_cast<int>(rows.size());
        int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
        Mat mat(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) mat.at(i, j) = Int(rows[i][j].get<std::string>());
        rep.maps[EdgeId::parse(name)] = mat;
    }
    return rep;
}

MatrixRep tree_module(const CoeffQuiver& gamma, const QuiverDn& q) {
    MatrixRep rep;
    rep.dims = gamma.full_type();

    // Basis position of each coefficient-quiver vertex within its label class.
    std::map<int, int> pos;
    std::map<VarId, int> counts;
    for (auto& v : gamma.vertices) pos[v.id] = counts[v.label]++;

    for (EdgeId e : q.edges()) {
        Arrow ar = q.arrow(e);
        rep.maps[e] = Mat(rep.dims.at(ar.target), rep.dims.at(ar.source));
    }
    for (auto& a : gamma.arrows) {
        Arrow ar = q.arrow(a.edge);
        if (gamma.label_of(a.source) != ar.source || gamma.label_of(a.target) != ar.target)
            throw InconsistentLabels("arrow " + a.edge.name() + " disagrees with the quiver orientation");
        rep.maps[a.edge].at(pos[a.target], pos[a.source]) = 1;
    }
    return rep;
}

MatrixRep reflect_rep(const QuiverDn& q, VarId at, const MatrixRep& m) {
    const bool sink = q.is_sink(at);
    if (!sink && !q.is_source(at)) throw std::invalid_argument(at.name() + " is neither sink nor source");

    std::vector<Arrow> touching;
    for (auto& ar : q.arrows())
        if ((sink && ar.target == at) || (!sink && ar.source == at)) touching.push_back(ar);

    MatrixRep out;
    out.dims = m.dims;
    for (auto& [e, mat] : m.maps) out.maps[e] = mat;

    if (sink) {
        // phi: (+) M_p -> M_at, block columns in edge order; new space = ker phi.
        int total = 0;
        for (auto& ar : touching) total += m.dims.at(ar.source);
        Mat phi(m.dims.at(at), total);
        int off = 0;
        for (auto& ar : touching) {
            const Mat& blk = m.maps.at(ar.edge);
            for (int i = 0; i < blk.rows; ++i)
                for (int j = 0; j < blk.cols; ++j) phi.at(i, off + j) = blk.at(i, j);
            off += blk.cols;
        }
        auto basis = kernel_basis(phi);
        int k = static_cast<int>(basis.size());
        out.dims.set(at, k);
        off = 0;
        for (auto& ar : touching) {
            int mp = m.dims.at(ar.source);
            Mat proj(mp, k);  // reversed arrow at -> p
            for (int col = 0; col < k; ++col)
                for (int i = 0; i < mp; ++i) proj.at(i, col) = basis[col][off + i];
            out.maps[ar.edge] = proj;
            off += mp;
        }
    } else {
        // phi: M_at -> (+) M_p, block rows; new space = coker phi via the left
        // kernel of phi.
        int total = 0;
        for (auto& ar : touching) total += m.dims.at(ar.target);
        Mat phi(total, m.dims.at(at));
        int off = 0;
        for (auto& ar : touching) {
            const Mat& blk = m.maps.at(ar.edge);
            for (int i = 0; i < blk.rows; ++i)
                for (int j = 0; j < blk.cols; ++j) phi.at(off + i, j) = blk.at(i, j);
            off += blk.rows;
        }
        auto cobasis = kernel_basis(transpose(phi));  // rows y with y phi = 0
        int k = static_cast<int>(cobasis.size());
        out.dims.set(at, k);
        off = 0;
        for (auto& ar : touching) {
            int mp = m.dims.at(ar.target);
            Mat inc(k, mp);  // reversed arrow p -> at
            for (int row = 0; row < k; ++row)
                for (int j = 0; j < mp; ++j) inc.at(row, j) = cobasis[row][off + j];
            out.maps[ar.edge] = inc;
            off += mp;
        }
    }
    return out;
}

namespace {

// Undoes the junction deletion: re-inserts the junction vertex of the
// subspace orientation as a copy of the vertex below it, with an identity
// chain map; c and d reattach to the copy.
MatrixRep lift_rep_at_junction(const MatrixRep& hat, int n) {
    const VarId junction = VarId::inner(n - 4);
    const VarId below = VarId::inner(n - 5);
    MatrixRep rep;
    rep.dims = hat.dims;
    rep.dims.set(junction, hat.dims.at(below));
    for (auto& [e, mat] : hat.maps) rep.maps[e] = mat;  // a, b, c, d and the lower chain
    int d = rep.dims.at(junction);
    Mat id(d, d);
    for (int i = 0; i < d; ++i) id.at(i, i) = 1;
    rep.maps[EdgeId::v(n - 5)] = id;
    return rep;
}

}  // namespace

MatrixRep rep_from_root(const QuiverDn& q, const DimVec& alpha) {
    ReflectionWord word = reflection_word(q, alpha);
    std::vector<QuiverDn> quivers{q};
    for (auto& st : word.steps) quivers.push_back(quivers.back().reflect_quiver(st.q));

    MatrixRep rep;
    const QuiverDn& last = quivers.back();
    if (word.simple_seed) {
        rep.dims = DimVec::unit(word.simple);
        for (EdgeId e : last.edges()) {
            Arrow ar = last.arrow(e);
            rep.maps[e] = Mat(rep.dims.at(ar.target), rep.dims.at(ar.source));
        }
    } else if (auto match = match_tube_chain_type(word.base)) {
        rep = tree_module(build_tube_chain((*match)[0], (*match)[1], (*match)[2]), last);
    } else if (auto reduced = reduce_root_at_junction(QuiverDn::subspace(q.n()), word.base)) {
        rep = lift_rep_at_junction(rep_from_root(QuiverDn::subspace(q.n() - 1), *reduced), q.n());
    } else {
        throw NotARoot("no tree-module seed for " + alpha.to_string());
    }
    for (int i = static_cast<int>(word.steps.size()) - 1; i >= 0; --i)
        rep = reflect_rep(quivers[i + 1], word.steps[i].q, rep);
    if (!(rep.dims == alpha)) throw std::logic_error("reflection functor chain missed the target root");
    return rep;
}

MatrixRep homogeneous_rep(const QuiverDn& q, int r, long lambda) {
    if (!(q == QuiverDn::subspace(4))) throw BadParameter("homogeneous_rep is built on D~4 in subspace orientation");
    if (lambda == 0 || lambda == 1) throw BadParameter("lambda in {0,1} degenerates to an exceptional tube");
    if (r != 1 && r != 2) throw BadParameter("r must be 1 or 2");

    MatrixRep rep;
    VarId center = VarId::inner(0);
    rep.dims.set(center, 2 * r);
    for (VarId v : {VarId::a(), VarId::b(), VarId::c(), VarId::d()}) rep.dims.set(v, r);

    if (r == 1) {
        auto line = [&](long x, long y) {
            Mat m(2, 1);
            m.at(0, 0) = x;
            m.at(1, 0) = y;
            return m;
        };
        rep.maps[EdgeId::a()] = line(1, 0);
        rep.maps[EdgeId::b()] = line(0, 1);
        rep.maps[EdgeId::c()] = line(1, 1);
        rep.maps[EdgeId::d()] = line(1, lambda);
    } else {
        auto plane = [&](long a00, long a01, long a10, long a11, long b00, long b01, long b10, long b11) {
            Mat m(4, 2);
            m.at(0, 0) = a00;
            m.at(0, 1) = a01;
            m.at(1, 0) = a10;
            m.at(1, 1) = a11;
            m.at(2, 0) = b00;
            m.at(2, 1) = b01;
            m.at(3, 0) = b10;
            m.at(3, 1) = b11;
            return m;
        };
        rep.maps[EdgeId::a()] = plane(1, 0, 0, 1, 0, 0, 0, 0);
        rep.maps[EdgeId::b()] = plane(0, 0, 0, 0, 1, 0, 0, 1);
        rep.maps[EdgeId::c()] = plane(1, 0, 0, 1, 1, 0, 0, 1);
        rep.maps[EdgeId::d()] = plane(1, 0, 0, 1, lambda, 1, 0, lambda);
    }
    return rep;
}

long endomorphism_dimension(const QuiverDn& q, const MatrixRep& m) {
    // Unknowns: entries of E_v per vertex; equations E_tgt M_e = M_e E_src.
    std::vector<VarId> vs = q.vertices();
    std::map<VarId, int> offset;
    int total = 0;
    for (VarId v : vs) {
        offset[v] = total;
        total += m.dims.at(v) * m.dims.at(v);
    }
    std::vector<std::vector<Int>> rows;
    for (auto& ar : q.arrows()) {
        const Mat& me = m.maps.at(ar.edge);
        int s = m.dims.at(ar.source), t = m.dims.at(ar.target);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < s; ++j) {
                std::vector<Int> row(total, Int(0));
                // (E_t M_e)_{ij} = sum_k E_t[i][k] M_e[k][j]
                for (int k = 0; k < t; ++k) row[offset[ar.target] + i * t + k] += me.at(k, j);
                // -(M_e E_s)_{ij} = -sum_k M_e[i][k] E_s[k][j]
                for (int k = 0; k < s; ++k) row[offset[ar.source] + k * s + j] -= me.at(i, k);
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return total;
    Mat big(static_cast<int>(rows.size()), total);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < total; ++j) big.at(static_cast<int>(i), j) = rows[i][j];
    return total - rational_rank(big);
}

MatrixRep direct_sum(const QuiverDn& q, const MatrixRep& x, const MatrixRep& y) {
    MatrixRep out;
    out.dims = x.dims + y.dims;
    for (EdgeId e : q.edges()) {
        Arrow ar = q.arrow(e);
        const Mat& mx = x.maps.at(e);
        const Mat& my = y.maps.at(e);
        Mat m(out.dims.at(ar.target), out.dims.at(ar.source));
        for (int i = 0; i < mx.rows; ++i)
            for (int j = 0; j < mx.cols; ++j) m.at(i, j) = mx.at(i, j);
        for (int i = 0; i < my.rows; ++i)
            for (int j = 0; j < my.cols; ++j) m.at(mx.rows + i, mx.cols + j) = my.at(i, j);
        out.maps[e] = m;
    }
    return out;
}

namespace {

Mat mat_product(const Mat& a, const Mat& b) {
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

// Composite matrices along the unique directed path u -> v, for all pairs.
std::map<std::pair<VarId, VarId>, Mat> path_composites(const QuiverDn& q, const MatrixRep& m) {
    std::map<std::pair<VarId, VarId>, Mat> comp;
    for (VarId u : q.vertices()) {
        // breadth-first along arrows away from u
        std::vector<VarId> frontier{u};
        std::map<VarId, Mat> reached;
        {
            Mat id(m.dims.at(u), m.dims.at(u));
            for (int i = 0; i < id.rows; ++i) id.at(i, i) = 1;
            reached[u] = id;
        }
        while (!frontier.empty()) {
            std::vector<VarId> next;
            for (VarId p : frontier)
                for (auto& ar : q.arrows())
                    if (ar.source == p && !reached.count(ar.target)) {
                        reached[ar.target] = mat_product(m.maps.at(ar.edge), reached[p]);
                        next.push_back(ar.target);
                    }
            frontier = std::move(next);
        }
        for (auto& [v, mat] : reached)
            if (!(v == u)) comp[{u, v}] = mat;
    }
    return comp;
}

}  // namespace

bool good_reduction(const QuiverDn& q, const MatrixRep& m, long p) {
    // Rank over F_p must match the rational rank for every composite map
    // along a directed path and for every stacked subset of such maps at a
    // vertex.  Subsets are needed: two arm lines can collide mod p even when
    // the full stack keeps its rank, and collisions can happen through a
    // chain of isomorphisms, so composites enter too.
    auto comp = path_composites(q, m);
    for (VarId v : q.vertices()) {
        for (bool incoming : {true, false}) {
            std::vector<const Mat*> touching;
            for (auto& [uv, mat] : comp) {
                if (incoming && uv.second == v) touching.push_back(&mat);
                if (!incoming && uv.first == v) touching.push_back(&mat);
            }
            const size_t k = touching.size();
            for (size_t subset = 1; subset < (size_t(1) << k); ++subset) {
                std::vector<const Mat*> blocks;
                int other = 0;
                for (size_t i = 0; i < k; ++i)
                    if (subset >> i & 1) {
                        blocks.push_back(touching[i]);
                        other += incoming ? touching[i]->cols : touching[i]->rows;
                    }
                int mv = m.dims.at(v);
                Mat stack = incoming ? Mat(mv, other) : Mat(other, mv);
                int off = 0;
                for (const Mat* blk : blocks) {
                    for (int i = 0; i < blk->rows; ++i)
                        for (int j = 0; j < blk->cols; ++j) {
                            if (incoming)
                                stack.at(i, off + j) = blk->at(i, j);
                            else
                                stack.at(off + i, j) = blk->at(i, j);
                        }
                    off += incoming ? blk->cols : blk->rows;
                }
                PMat pm = mat_mod(stack, p);
                if (p_rank(pm, p) != rational_rank(stack)) return false;
            }
        }
    }
    return true;
}

Int count_points(const QuiverDn& q, const MatrixRep& m, const DimVec& e, long p) {
    if (!good_reduction(q, m, p)) throw BadReduction("bad reduction at p=" + std::to_string(p));
    PointCounter pc(q, m, e, p);
    pc.run();
    return pc.total;
}

Int count_points_q0(const QuiverDn& q, const MatrixRep& m, const DimVec& e, long p, VarId sink) {
    if (!q.is_sink(sink)) throw std::invalid_argument("q0-stratum counting needs a sink");
    if (!good_reduction(q, m, p)) throw BadReduction("bad reduction at p=" + std::to_string(p));
    PointCounter pc(q, m, e, p);
    pc.surjective_at = sink;
    pc.run();
    return pc.total;
}

CountingPolynomial counting_polynomial(const QuiverDn& q, const MatrixRep& m, const DimVec& e) {
    int degree_bound = 0;
    for (VarId v : q.vertices()) degree_bound += e.at(v) * (m.dims.at(v) - e.at(v));
    int needed = degree_bound + 1;

    CountingPolynomial out;
    std::vector<Int> values;
    std::optional<std::pair<long, Int>> holdout;
    for (long p : prime_pool()) {
        if (holdout) break;
        if (!good_reduction(q, m, p)) continue;
        PointCounter pc(q, m, e, p);
        pc.run();
        if (static_cast<int>(out.primes_used.size()) == needed) {
            holdout = {p, pc.total};
            break;
        }
        out.primes_used.push_back(p);
        values.push_back(pc.total);
    }
    if (static_cast<int>(out.primes_used.size()) < needed || !holdout)
        throw BadReduction("not enough primes of good reduction");

    // Exact Lagrange interpolation through (p_i, values_i).
    std::vector<Rat> coeffs(needed, Rat(0));
    for (int i = 0; i < needed; ++i) {
        std::vector<Rat> numer(1, Rat(1));  // polynomial, ascending
        Rat denom(1);
        for (int j = 0; j < needed; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(numer.size() + 1, Rat(0));
            for (size_t k = 0; k < numer.size(); ++k) {
                next[k] -= numer[k] * out.primes_used[j];
                next[k + 1] += numer[k];
            }
            numer = std::move(next);
            denom *= Rat(out.primes_used[i] - out.primes_used[j]);
        }
        for (size_t k = 0; k < numer.size(); ++k) coeffs[k] += numer[k] * Rat(values[i]) / denom;
    }
    for (auto& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1)
            throw NonIntegralInterpolation("counting polynomial has non-integer coefficients");
        out.coeffs.push_back(Int(boost::multiprecision::numerator(c)));
    }
    while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
    if (out.value_at(holdout->first) != holdout->second)
        throw BadReduction("count at a held-out prime disagrees with the interpolated polynomial");
    return out;
}

Int euler_char(const QuiverDn& q, const MatrixRep& m, const DimVec& e) {
    CountingPolynomial cp = counting_polynomial(q, m, e);
    Int chi = cp.value_at(1);
    if (chi < 0) throw NonIntegralInterpolation("negative Euler characteristic from interpolation");
    return chi;
}

LaurentPoly fpoly_oracle(const QuiverDn& q, const MatrixRep& m) {
    if (m.total_dim() > kOracleDimGuard)
        throw BadParameter("fpoly_oracle guard: total dimension exceeds " + std::to_string(kOracleDimGuard));
    LaurentPoly f;
    std::vector<VarId> vs = q.vertices();
    DimVec e;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == vs.size()) {
            Int chi = euler_char(q, m, e);
            if (chi != 0) f.add_term(e.monomial(), chi);
            return;
        }
        for (int x = 0; x <= m.dims.at(vs[i]); ++x) {
            e.set(vs[i], x);
            self(self, i + 1);
        }
        e.set(vs[i], 0);
        return;
    };
    rec(rec, 0);
    return f;
}

}  // namespace dnq
