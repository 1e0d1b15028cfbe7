#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey
{
    /// Fixed-size dynamic bitset over vertex ids, tuned for the adjacency
    /// intersections that dominate the search kernels.
    class Bitset
    {
    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        Bitset() = default;
        explicit Bitset(std::size_t size, bool value = false) :
            _words((size + 63) / 64, value ? ~std::uint64_t{0} : 0),
            _size(size)
        {
            trim();
        }

        auto size() const -> std::size_t { return _size; }

        auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1u; }
        void set(std::size_t i) { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        void set(std::size_t i, bool value) { value ? set(i) : reset(i); }

        void set_all()
        {
            for (auto & w : _words)
                w = ~std::uint64_t{0};
            trim();
        }

        void reset_all()
        {
            for (auto & w : _words)
                w = 0;
        }

        auto count() const -> std::size_t
        {
            std::size_t result = 0;
            for (auto w : _words)
                result += std::popcount(w);
            return result;
        }

        auto any() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return true;
            return false;
        }

        auto none() const -> bool { return ! any(); }

        auto first() const -> std::size_t { return next(0); }

        /// Smallest set index >= from, or npos.
        auto next(std::size_t from) const -> std::size_t
        {
            if (from >= _size)
                return npos;
            std::size_t w = from / 64;
            std::uint64_t bits = _words[w] & (~std::uint64_t{0} << (from % 64));
            while (true) {
                if (bits)
                    return w * 64 + std::countr_zero(bits);
                if (++w == _words.size())
                    return npos;
                bits = _words[w];
            }
        }

        auto intersects(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        auto intersection_count(const Bitset & other) const -> std::size_t
        {
            std::size_t result = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                result += std::popcount(_words[i] & other._words[i]);
            return result;
        }

        auto is_subset_of(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        /// Set difference.
        auto operator-=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
        friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }
        friend auto operator-(Bitset a, const Bitset & b) -> Bitset { return a -= b; }

        auto complement() const -> Bitset
        {
            Bitset result = *this;
            for (auto & w : result._words)
                w = ~w;
            result.trim();
            return result;
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                auto bits = _words[w];
                while (bits) {
                    f(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
        }

        auto to_vector() const -> std::vector<std::size_t>
        {
            std::vector<std::size_t> result;
            result.reserve(count());
            for_each([&](std::size_t i) { result.push_back(i); });
            return result;
        }

        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

    private:
        void trim()
        {
            if (_size % 64 != 0 && ! _words.empty())
                _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
        }

        std::vector<std::uint64_t> _words;
        std::size_t _size = 0;
    };
}
