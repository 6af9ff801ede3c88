#include "sigtree/sequence.hpp"

#include <sstream>

#include "sigtree/errors.hpp"

namespace sigtree {
namespace detail {

FixedPointStream::FixedPointStream(std::shared_ptr<const Morphism> sigma,
                                   Letter start)
    : sigma_(std::move(sigma)) {
  if (!is_prolongable(*sigma_, start))
    throw NotProlongable(sigma_->source().symbol(start));
  buffer_ = sigma_->image(start);
}

Letter FixedPointStream::at(std::size_t i) {
  while (buffer_.size() <= i) {
    // Cannot happen for a prolongable morphism: |sigma(v)| > |v| for every
    // prefix v of the fixed point.
    if (expanded_ >= buffer_.size())
      throw std::logic_error("fixed point expansion stalled");
    const Word& img = sigma_->image(buffer_[expanded_++]);
    buffer_.insert(buffer_.end(), img.begin(), img.end());
  }
  return buffer_[i];
}

}  // namespace detail

namespace {

template <class T>
void write_list(std::ostream& os, const std::vector<T>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
}

}  // namespace

IntSeq IntSeq::periodic(IntWord preperiod, IntWord period) {
  if (period.empty()) throw ArgumentError("period must be non-empty");
  return IntSeq(Periodic{std::move(preperiod), std::move(period)});
}

IntSeq IntSeq::substitutive(Morphism sigma, Letter start, Coding coding) {
  if (!sigma.is_endomorphism())
    throw ArgumentError("substitutive sequences need an endomorphism");
  if (!sigma.source().contains(start))
    throw ArgumentError("start letter outside the morphism alphabet");
  if (coding.size() != sigma.source().size())
    throw ArgumentError("coding needs one value per letter");
  return IntSeq(Substitutive{std::make_shared<const Morphism>(std::move(sigma)),
                             start, std::move(coding)});
}

IntSeq::Reader::Reader(const IntSeq& seq) : descriptor_(seq.descriptor_) {
  if (auto* sub = std::get_if<Substitutive>(&descriptor_))
    stream_.emplace(sub->sigma, sub->start);
}

std::uint64_t IntSeq::Reader::next() {
  const std::size_t i = pos_++;
  if (auto* p = std::get_if<Periodic>(&descriptor_)) {
    if (i < p->preperiod.size()) return p->preperiod[i];
    return p->period[(i - p->preperiod.size()) % p->period.size()];
  }
  return std::get<Substitutive>(descriptor_).coding[stream_->at(i)];
}

IntWord IntSeq::prefix(std::size_t n) const {
  auto r = reader();
  IntWord out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(r.next());
  return out;
}

std::string IntSeq::describe() const {
  std::ostringstream os;
  if (auto* p = std::get_if<Periodic>(&descriptor_)) {
    os << "periodic:";
    if (!p->preperiod.empty()) {
      os << "u=";
      write_list(os, p->preperiod);
      os << ';';
    }
    os << "v=";
    write_list(os, p->period);
  } else {
    const auto& s = std::get<Substitutive>(descriptor_);
    os << "substitutive:start=" << s.sigma->source().symbol(s.start)
       << ";coding=";
    write_list(os, s.coding);
  }
  return os.str();
}

LetterSeq LetterSeq::periodic(Alphabet alphabet, Word preperiod, Word period) {
  if (period.empty()) throw ArgumentError("period must be non-empty");
  for (const Word* w : {&preperiod, &period})
    for (Letter l : *w)
      if (!alphabet.contains(l))
        throw AlphabetError("labelling letter outside its alphabet");
  return LetterSeq(
      Periodic{std::move(alphabet), std::move(preperiod), std::move(period)});
}

LetterSeq LetterSeq::morphic(Morphism sigma, Letter start, Morphism image) {
  if (!sigma.is_endomorphism())
    throw ArgumentError("morphic sequences need an endomorphism");
  if (!sigma.source().contains(start))
    throw ArgumentError("start letter outside the morphism alphabet");
  if (!(image.source() == sigma.source()))
    throw ArgumentError("image morphism must be defined on sigma's alphabet");
  // The image must stay infinite: either it erases no reachable letter, or
  // it is at least as long as sigma letterwise.
  const auto reach = reachable_letters(sigma, start);
  bool non_erasing = true;
  bool dominates = true;
  for (Letter c = 0; c < sigma.source().size(); ++c) {
    if (reach[c] && image.image(c).empty()) non_erasing = false;
    if (image.image(c).size() < sigma.image(c).size()) dominates = false;
  }
  if (!non_erasing && !dominates)
    throw ArgumentError("image morphism may erase the whole fixed point");
  return LetterSeq(Morphic{std::make_shared<const Morphism>(std::move(sigma)),
                           start,
                           std::make_shared<const Morphism>(std::move(image))});
}

const Alphabet& LetterSeq::alphabet() const noexcept {
  if (auto* p = std::get_if<Periodic>(&descriptor_)) return p->alphabet;
  return std::get<Morphic>(descriptor_).image->target();
}

LetterSeq::Reader::Reader(const LetterSeq& seq) : descriptor_(seq.descriptor_) {
  if (auto* m = std::get_if<Morphic>(&descriptor_))
    stream_.emplace(m->sigma, m->start);
}

Letter LetterSeq::Reader::next() {
  if (auto* p = std::get_if<Periodic>(&descriptor_)) {
    const std::size_t i = pos_++;
    if (i < p->preperiod.size()) return p->preperiod[i];
    return p->period[(i - p->preperiod.size()) % p->period.size()];
  }
  const auto& m = std::get<Morphic>(descriptor_);
  while (pending_pos_ == pending_.size()) {
    pending_ = m.image->image(stream_->at(pos_++));
    pending_pos_ = 0;
  }
  return pending_[pending_pos_++];
}

Word LetterSeq::prefix(std::size_t n) const {
  auto r = reader();
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(r.next());
  return out;
}

}  // namespace sigtree
