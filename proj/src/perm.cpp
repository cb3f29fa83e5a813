#include "tiltlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tiltlab {

Permutation::Permutation(int n) {
    if (n < 0) throw Error(Errc::invalid, "negative permutation size");
    images_.resize(static_cast<std::size_t>(n));
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images0) {
    const int n = static_cast<int>(images0.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images0) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw Error(Errc::invalid, "mapping is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    Permutation p;
    p.images_ = std::move(images0);
    return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& m) {
    std::vector<int> images0(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) images0[i] = m[i] - 1;
    return from_images(std::move(images0));
}

Permutation Permutation::from_cycles(std::string_view text, int n) {
    Permutation p(n);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip_ws();
    if (text.substr(i, 2) == "id") return p;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw Error(Errc::parse, "cycle notation: expected '(' at position " + std::to_string(i + 1));
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            int v = 0;
            bool any = false;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + (text[i] - '0');
                ++i;
                any = true;
            }
            if (!any)
                throw Error(Errc::parse, "cycle notation: expected index at position " + std::to_string(i + 1));
            if (v < 1 || v > n)
                throw Error(Errc::invalid, "cycle index " + std::to_string(v) + " out of range 1.." +
                                               std::to_string(n));
            cycle.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            if (p.images_[static_cast<std::size_t>(from)] != from)
                throw Error(Errc::invalid, "index " + std::to_string(from + 1) + " appears in two cycles");
            p.images_[static_cast<std::size_t>(from)] = to;
        }
    }
    // Re-validate in case of crossing cycles writing over fixed points.
    return from_images(std::move(p.images_));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return from_images(std::move(v));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return from_images(std::move(inv));
}

Permutation Permutation::then(const Permutation& g) const {
    if (g.n() != n()) throw Error(Errc::invalid, "composing permutations of different sizes");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = g.images_[static_cast<std::size_t>(images_[i])];
    return from_images(std::move(out));
}

std::string Permutation::cycles_string() const {
    std::vector<char> used(images_.size(), 0);
    std::string out;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (used[start] || images_[start] == static_cast<int>(start)) continue;
        out += '(';
        std::size_t cur = start;
        bool first = true;
        while (!used[cur]) {
            used[cur] = 1;
            if (!first) out += ' ';
            out += std::to_string(cur + 1);
            first = false;
            cur = static_cast<std::size_t>(images_[cur]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace tiltlab
