#include "germlab/random.hpp"

#include <limits>

namespace germlab {

std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::string_view context) {
  // FNV-1a over the context, folded into the parent.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : context) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix_seed(parent ^ mix_seed(h));
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return mix_seed(parent ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

std::int64_t SeededSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

std::int64_t SeededSampler::uniform_nonzero(std::int64_t lo, std::int64_t hi) {
  std::int64_t v;
  do {
    v = uniform(lo, hi);
  } while (v == 0);
  return v;
}

}  // namespace germlab
