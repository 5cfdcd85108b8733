#ifndef DW2_RNG_HPP
#define DW2_RNG_HPP

#include <cstdint>

namespace dw2 {

// splitmix64; fixed algorithm so that seeded runs are reproducible across
// platforms and standard libraries
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    bool flip() { return next() & 1; }

    // independent stream for trial i of a seeded suite
    static Rng for_trial(uint64_t seed, uint64_t trial) {
        Rng mix(seed ^ (0xa0761d6478bd642full * (trial + 1)));
        mix.next();
        return mix;
    }

  private:
    uint64_t state_;
};

}  // namespace dw2

#endif
