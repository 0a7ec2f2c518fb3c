#include "torusham/face_sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusham {

namespace {

std::vector<int> canonical_cyclic(std::vector<int> v) {
    if (v.empty()) return v;
    std::vector<int> best = v;
    const int n = static_cast<int>(v.size());
    for (int flip = 0; flip < 2; ++flip) {
        for (int s = 0; s < n; ++s) {
            std::vector<int> cand(n);
            for (int i = 0; i < n; ++i) cand[i] = v[(s + i) % n];
            if (cand < best) best = cand;
        }
        std::reverse(v.begin(), v.end());
    }
    return best;
}

} // namespace

FaceSequenceType::FaceSequenceType(std::vector<int> entries)
    : entries_(canonical_cyclic(std::move(entries))) {
    for (int t : entries_)
        if (t < 3) throw std::invalid_argument("face size must be >= 3");
}

std::map<int, int> FaceSequenceType::incidence() const {
    std::map<int, int> inc;
    for (int t : entries_) ++inc[t];
    return inc;
}

bool FaceSequenceType::euler_balanced() const {
    // multiply d/2 - 1 = sum 1/t by 2*prod(t): exact in 64 bits for sizes <= 42
    long long prod = 1;
    for (int t : entries_) prod *= t;
    const long long d = degree();
    long long lhs = (d - 2) * prod; // 2*prod*(d/2 - 1)
    long long rhs = 0;
    for (int t : entries_) rhs += 2 * (prod / t);
    return lhs == rhs;
}

std::string FaceSequenceType::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << '.';
        os << entries_[i];
    }
    return os.str();
}

FaceSequenceType FaceSequenceType::parse(const std::string& dotted) {
    std::vector<int> entries;
    std::stringstream ss(dotted);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty()) throw std::invalid_argument("bad face sequence: " + dotted);
        entries.push_back(std::stoi(tok));
    }
    if (entries.size() < 3) throw std::invalid_argument("bad face sequence: " + dotted);
    return FaceSequenceType(entries);
}

FaceSequenceType type_33344() { return FaceSequenceType({3, 3, 3, 4, 4}); }
FaceSequenceType type_33434() { return FaceSequenceType({3, 3, 4, 3, 4}); }
FaceSequenceType type_3636() { return FaceSequenceType({3, 6, 3, 6}); }
FaceSequenceType type_33336() { return FaceSequenceType({3, 3, 3, 3, 6}); }
FaceSequenceType type_488() { return FaceSequenceType({4, 8, 8}); }
FaceSequenceType type_31212() { return FaceSequenceType({3, 12, 12}); }
FaceSequenceType type_4612() { return FaceSequenceType({4, 6, 12}); }
FaceSequenceType type_6434() { return FaceSequenceType({3, 4, 6, 4}); }

const std::vector<FaceSequenceType>& the_eight_types() {
    static const std::vector<FaceSequenceType> eight = [] {
        std::vector<FaceSequenceType> v = {type_33344(), type_33434(), type_3636(),
                                           type_33336(), type_488(),   type_31212(),
                                           type_4612(),  type_6434()};
        std::sort(v.begin(), v.end());
        return v;
    }();
    return eight;
}

namespace {

// Around an m-gon with m odd, the faces met across its edges form a cyclic
// sequence f_1..f_m in which each consecutive pair must be a pair flanking
// some occurrence of m in the vertex sequence. If no such closed sequence
// exists the sequence is not realizable.
bool odd_face_consistent(const std::vector<int>& seq) {
    const int d = static_cast<int>(seq.size());
    std::set<int> odd_sizes;
    for (int t : seq)
        if (t % 2 == 1) odd_sizes.insert(t);
    for (int m : odd_sizes) {
        // allowed unordered flank pairs of an m-occurrence
        std::set<std::pair<int, int>> pairs;
        std::set<int> alphabet;
        for (int i = 0; i < d; ++i) {
            if (seq[i] != m) continue;
            int l = seq[(i + d - 1) % d], r = seq[(i + 1) % d];
            pairs.insert({std::min(l, r), std::max(l, r)});
            alphabet.insert(l);
            alphabet.insert(r);
        }
        // search for a cyclic word f_1..f_m with all consecutive pairs allowed
        std::vector<int> letters(alphabet.begin(), alphabet.end());
        std::vector<int> word;
        bool found = false;
        auto ok = [&](int a, int b) {
            return pairs.count({std::min(a, b), std::max(a, b)}) > 0;
        };
        std::function<void()> rec = [&]() {
            if (found) return;
            if (static_cast<int>(word.size()) == m) {
                if (ok(word.back(), word.front())) found = true;
                return;
            }
            for (int c : letters) {
                if (!word.empty() && !ok(word.back(), c)) continue;
                word.push_back(c);
                rec();
                word.pop_back();
                if (found) return;
            }
        };
        rec();
        if (!found) return false;
    }
    return true;
}

} // namespace

std::vector<FaceSequenceType> enumerate_semi_equivelar_types() {
    std::set<FaceSequenceType> out;
    for (int d = 3; d <= 6; ++d) {
        // Step 1: non-decreasing multisets with sum of 1/t equal to d/2-1.
        // Sizes are bounded by the balance (t <= 42, reached at {3,7,42}).
        const int max_size = 42;
        const double target = d / 2.0 - 1.0;
        std::vector<int> seq;
        std::vector<std::vector<int>> multisets;
        std::function<void(int, double)> rec = [&](int min_t, double partial) {
            int pos = static_cast<int>(seq.size());
            if (pos == d) {
                FaceSequenceType cand(seq);
                if (cand.euler_balanced()) multisets.push_back(seq);
                return;
            }
            for (int t = min_t; t <= max_size; ++t) {
                double lo = partial + (d - pos) * (1.0 / max_size);
                double hi = partial + (d - pos) * (1.0 / t);
                if (hi < target - 1e-9) break;    // even t everywhere is too small
                if (lo > target + 1e-9) return;   // cannot shrink below target
                seq.push_back(t);
                rec(t, partial + 1.0 / t);
                seq.pop_back();
            }
        };
        rec(3, 0.0);
        // Step 2: distinct cyclic arrangements of each multiset, filtered by
        // the odd-face flank condition and by having two distinct sizes.
        for (auto ms : multisets) {
            std::sort(ms.begin(), ms.end());
            do {
                FaceSequenceType cand(ms);
                if (out.count(cand)) continue;
                if (cand.incidence().size() < 2) continue; // equivelar, not semi
                if (!odd_face_consistent(cand.entries())) continue;
                out.insert(cand);
            } while (std::next_permutation(ms.begin(), ms.end()));
        }
    }
    return std::vector<FaceSequenceType>(out.begin(), out.end());
}

} // namespace torusham
