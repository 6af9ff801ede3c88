#include "sigtree/morphism.hpp"

#include <deque>

#include "sigtree/errors.hpp"

namespace sigtree {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw ArgumentError("morphism needs one image per letter: " +
                        std::to_string(source_.size()) + " letters, " +
                        std::to_string(images_.size()) + " images");
  for (std::size_t c = 0; c < images_.size(); ++c)
    for (Letter l : images_[c])
      if (!target_.contains(l))
        throw ArgumentError("image of '" + source_.symbol(c) +
                            "' uses a letter outside the target alphabet");
}

Morphism Morphism::endomorphism(Alphabet alphabet, std::vector<Word> images) {
  Alphabet copy = alphabet;
  return Morphism(std::move(alphabet), std::move(copy), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  images.reserve(alphabet.size());
  for (Letter c = 0; c < alphabet.size(); ++c) images.push_back({c});
  return endomorphism(alphabet, std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (!source_.contains(a))
    throw ArgumentError("letter index " + std::to_string(a) +
                        " outside the morphism alphabet");
  return images_[a];
}

bool Morphism::is_coding() const noexcept {
  for (const auto& w : images_)
    if (w.size() != 1) return false;
  return true;
}

Word Morphism::apply(std::span<const Letter> word) const {
  Word out;
  for (Letter c : word) {
    const Word& img = image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Coding length_coding(const Morphism& sigma) {
  Coding f;
  f.reserve(sigma.images().size());
  for (const auto& w : sigma.images()) f.push_back(w.size());
  return f;
}

std::vector<bool> reachable_letters(const Morphism& sigma, Letter a) {
  std::vector<bool> seen(sigma.source().size(), false);
  std::deque<Letter> queue{a};
  seen.at(a) = true;
  while (!queue.empty()) {
    Letter c = queue.front();
    queue.pop_front();
    for (Letter d : sigma.image(c))
      if (d < seen.size() && !seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
  }
  return seen;
}

bool is_prolongable(const Morphism& sigma, Letter a) {
  if (!sigma.is_endomorphism())
    throw ArgumentError("prolongability needs an endomorphism");
  if (!sigma.source().contains(a))
    throw ArgumentError("letter index " + std::to_string(a) +
                        " outside the morphism alphabet");
  const auto& start_image = sigma.image(a);
  if (start_image.empty() || start_image.front() != a) return false;

  const std::size_t k = sigma.source().size();
  std::vector<bool> mortal(k, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (Letter c = 0; c < k; ++c) {
      if (mortal[c]) continue;
      bool all_mortal = true;
      for (Letter d : sigma.image(c)) all_mortal = all_mortal && mortal[d];
      if (all_mortal) {
        mortal[c] = true;
        changed = true;
      }
    }
  }

  // Immortal successors and the immortal part of each image length.
  std::vector<std::vector<Letter>> next(k);
  std::vector<std::size_t> live_length(k, 0);
  for (Letter c = 0; c < k; ++c)
    for (Letter d : sigma.image(c))
      if (!mortal[d]) {
        next[c].push_back(d);
        ++live_length[c];
      }

  auto reach_from = [&](Letter from, bool include_self) {
    std::vector<bool> seen(k, false);
    std::deque<Letter> queue;
    if (include_self) {
      seen[from] = true;
      queue.push_back(from);
    } else {
      for (Letter d : next[from])
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
    }
    while (!queue.empty()) {
      Letter c = queue.front();
      queue.pop_front();
      for (Letter d : next[c])
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
    }
    return seen;
  };

  const auto from_start = reach_from(a, true);
  for (Letter x = 0; x < k; ++x) {
    if (!from_start[x] || live_length[x] < 2) continue;
    if (reach_from(x, false)[x]) return true;
  }
  return false;
}

}  // namespace sigtree
