#include "wsep/cyclic.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wsep {

void check_ground(int n) {
    if (n < 1 || n > max_ground)
        throw invalid_input("ground set size must be in 1..64, got " + std::to_string(n));
}

subset full_set(int n) { return n >= 64 ? ~subset{0} : (subset{1} << n) - 1; }

static void check_elem(int a, int n) {
    if (a < 1 || a > n)
        throw invalid_input("element " + std::to_string(a) + " outside [1," + std::to_string(n) + "]");
}

subset make_subset(const std::vector<int>& elems, int n) {
    check_ground(n);
    subset s = 0;
    for (int a : elems) {
        check_elem(a, n);
        if (has(s, a)) throw invalid_input("repeated element " + std::to_string(a));
        s |= elem(a);
    }
    return s;
}

std::vector<int> members(subset s) {
    std::vector<int> out;
    out.reserve(card(s));
    while (s) {
        out.push_back(__builtin_ctzll(s) + 1);
        s &= s - 1;
    }
    return out;
}

std::string to_string(subset s, int n) {
    if (!s) return "{}";
    std::string out;
    for (int a : members(s)) {
        if (n >= 10 && !out.empty()) out += ',';
        out += std::to_string(a);
    }
    return out;
}

subset parse_subset(const std::string& text, int n) {
    if (text == "{}" || text.empty()) return 0;
    std::vector<int> elems;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
                throw invalid_input("bad subset string '" + text + "'");
            elems.push_back(std::stoi(tok));
        }
    } else {
        if (n >= 10 && text.size() > 1)
            throw invalid_input("subset '" + text + "' must be comma separated when n >= 10");
        for (char c : text) {
            if (!::isdigit(static_cast<unsigned char>(c)))
                throw invalid_input("bad subset string '" + text + "'");
            elems.push_back(c - '0');
        }
    }
    return make_subset(elems, n);
}

subset rotate(subset s, int n) {
    subset top = has(s, n) ? 1 : 0;
    return ((s << 1) & full_set(n)) | top;
}

subset rotate_to_front(subset s, int i, int n) {
    int sh = i - 1;
    if (sh == 0) return s;
    return ((s >> sh) | (s << (n - sh))) & full_set(n);
}

subset next_same_size(subset s, int n) {
    if (s == 0) return 0;
    subset c = s & (~s + 1);
    subset r = s + c;
    if (r == 0) return 0;  // overflow at n = 64
    subset nxt = (((r ^ s) >> 2) / c) | r;
    if (n < 64 && (nxt >> n)) return 0;
    return nxt;
}

bool cyclically_ordered(const std::vector<int>& seq, int n) {
    check_ground(n);
    subset seen = 0;
    for (int a : seq) {
        check_elem(a, n);
        if (has(seen, a)) throw invalid_input("repeated element " + std::to_string(a) + " in sequence");
        seen |= elem(a);
    }
    // a rotation is increasing iff the sequence descends at most once cyclically
    int descents = 0;
    for (std::size_t t = 0; t < seq.size(); ++t)
        if (seq[t] > seq[(t + 1) % seq.size()]) ++descents;
    return descents <= 1;
}

subset interval_members(const cyclic_interval& iv, int n) {
    check_ground(n);
    check_elem(iv.a, n);
    check_elem(iv.b, n);
    subset inside = 0;
    if (iv.a == iv.b) {
        inside = full_set(n) & ~elem(iv.a);
    } else {
        for (int x = iv.a % n + 1; x != iv.b; x = x % n + 1) inside |= elem(x);
    }
    bool left = iv.kind == interval_kind::closed || iv.kind == interval_kind::half_open_right;
    bool right = iv.kind == interval_kind::closed || iv.kind == interval_kind::half_open_left;
    if (iv.a == iv.b) {
        if (iv.kind == interval_kind::closed) return elem(iv.a);
        if (iv.kind == interval_kind::open) return inside;
        return 0;
    }
    if (left) inside |= elem(iv.a);
    if (right) inside |= elem(iv.b);
    return inside;
}

bool weakly_separated_unchecked(subset I, subset J, int n) {
    subset d1 = I & ~J, d2 = J & ~I;
    if (!d1 || !d2) return true;
    // walk [n] and count label changes in the cyclic word over d1 u d2
    int first = 0, prev = 0, changes = 0;
    for (int x = 1; x <= n; ++x) {
        int lab = has(d1, x) ? 1 : has(d2, x) ? 2 : 0;
        if (!lab) continue;
        if (!first) first = lab;
        else if (lab != prev) ++changes;
        prev = lab;
    }
    if (prev != first) ++changes;
    return changes <= 2;
}

bool weakly_separated(subset I, subset J, int n) {
    check_ground(n);
    if ((I | J) & ~full_set(n)) throw invalid_input("subset outside ground set");
    if (card(I) != card(J))
        throw invalid_input("weak separation needs equal sizes, got " + std::to_string(card(I)) + " and " +
                            std::to_string(card(J)));
    return weakly_separated_unchecked(I, J, n);
}

bool shifted_leq(int i, subset I, subset J, int n) {
    check_ground(n);
    check_elem(i, n);
    if (card(I) != card(J))
        throw invalid_input("shifted order needs equal sizes, got " + std::to_string(card(I)) + " and " +
                            std::to_string(card(J)));
    // i_t <=_i j_t for all t  iff  every <_i-prefix holds at least as many of I as of J
    subset rI = rotate_to_front(I, i, n), rJ = rotate_to_front(J, i, n);
    for (int p = 1; p <= n; ++p) {
        subset m = full_set(p);
        if (card(rI & m) < card(rJ & m)) return false;
    }
    return true;
}

} // namespace wsep
