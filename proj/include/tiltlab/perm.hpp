#ifndef TILTLAB_PERM_HPP
#define TILTLAB_PERM_HPP

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tiltlab/core.hpp"

namespace tiltlab {

// Bijection on slots 1..n, stored 0-based: image(i) is where the content of
// slot i ends up.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    static Permutation from_images(std::vector<int> images0);      // 0-based images
    static Permutation from_one_based(const std::vector<int>& m);  // mapping[i-1] = target of i
    // Cycle notation over 1-based indices, e.g. "(1 2)(3 4 5)"; "()" or "id"
    // for the identity. Indices not mentioned are fixed points.
    static Permutation from_cycles(std::string_view text, int n);
    static Permutation random(int n, std::mt19937_64& rng);

    int n() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[static_cast<std::size_t>(i)]; }  // 0-based
    int image1(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }
    bool is_identity() const;
    Permutation inverse() const;
    // Apply *this first, then g.
    Permutation then(const Permutation& g) const;
    std::string cycles_string() const;

    // Rearrange arbitrary slot contents: out[image(i)] = in[i].
    template <typename T>
    std::vector<T> apply(const std::vector<T>& in) const {
        std::vector<T> out(in.size());
        for (std::size_t i = 0; i < in.size(); ++i)
            out[static_cast<std::size_t>(images_[i])] = in[i];
        return out;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

}  // namespace tiltlab

#endif
