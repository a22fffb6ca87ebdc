#ifndef TRACEGEN_LETTER_SET_HPP
#define TRACEGEN_LETTER_SET_HPP

#include <bit>
#include <cstdint>
#include <cassert>

namespace tracegen {

/// Subset of an alphabet of at most 64 letters, stored as a single
/// machine word. Letters are 0-based indices into the declared order of
/// the owning DependenceGraph.
class LetterSet {
public:
    constexpr LetterSet() = default;

    static constexpr LetterSet from_bits(std::uint64_t bits) {
        LetterSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr LetterSet single(int letter) {
        assert(letter >= 0 && letter < 64);
        return from_bits(std::uint64_t{1} << letter);
    }

    /// The full alphabet {0, ..., n-1}.
    static constexpr LetterSet full(int n) {
        assert(n >= 0 && n <= 64);
        return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int letter) const {
        return (bits_ >> letter) & 1u;
    }
    constexpr bool contains_all(LetterSet other) const {
        return (other.bits_ & ~bits_) == 0;
    }
    constexpr bool intersects(LetterSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    /// Least letter index in the set; set must be nonempty.
    constexpr int least() const {
        assert(!empty());
        return std::countr_zero(bits_);
    }

    constexpr LetterSet with(int letter) const {
        return from_bits(bits_ | (std::uint64_t{1} << letter));
    }
    constexpr LetterSet without(int letter) const {
        return from_bits(bits_ & ~(std::uint64_t{1} << letter));
    }

    friend constexpr LetterSet operator&(LetterSet a, LetterSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr LetterSet operator|(LetterSet a, LetterSet b) { return from_bits(a.bits_ | b.bits_); }
    /// Set difference a \ b.
    friend constexpr LetterSet operator-(LetterSet a, LetterSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(LetterSet a, LetterSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(LetterSet a, LetterSet b) { return a.bits_ != b.bits_; }

    LetterSet& operator|=(LetterSet o) { bits_ |= o.bits_; return *this; }
    LetterSet& operator&=(LetterSet o) { bits_ &= o.bits_; return *this; }
    LetterSet& operator-=(LetterSet o) { bits_ &= ~o.bits_; return *this; }

    /// Iterates member letters in increasing index order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}
        constexpr int operator*() const { return std::countr_zero(bits_); }
        constexpr iterator& operator++() { bits_ &= bits_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return bits_ != o.bits_; }
    private:
        std::uint64_t bits_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

} // namespace tracegen

#endif
