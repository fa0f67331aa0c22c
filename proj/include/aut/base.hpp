#ifndef AUT_BASE_HPP
#define AUT_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aut {

enum class ErrorKind {
    contract,          // violated precondition (missing initial state, unreachable input, ...)
    alphabet_mismatch, // operation across automata over different alphabets
    size_guard,        // construction would exceed a configured size bound
    parse,             // malformed input file
    not_a_congruence,  // right-Cayley machine admits no two-sided extension
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Deterministic PRNG (splitmix64). std::uniform_int_distribution is not
// portable across standard libraries, so all randomness goes through this.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool coin() { return (next() & 1) != 0; }
};

} // namespace aut

#endif
