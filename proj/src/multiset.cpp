#include "opn/multiset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace opn {

Carrier::Carrier(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  auto dup = std::adjacent_find(atoms_.begin(), atoms_.end());
  if (dup != atoms_.end()) throw InvalidNet("duplicate identifier '" + *dup + "'");
}

std::optional<std::size_t> Carrier::find(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom,
                             [](const Atom& a, std::string_view b) { return a < b; });
  if (it == atoms_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::size_t Carrier::index(std::string_view atom, std::string_view what) const {
  if (auto i = find(atom)) return *i;
  throw InvalidNet("unknown " + std::string(what) + " '" + std::string(atom) + "'");
}

CarrierPtr make_carrier(std::vector<Atom> atoms) {
  return std::make_shared<const Carrier>(std::move(atoms));
}

CarrierPtr empty_carrier() {
  static const CarrierPtr empty = std::make_shared<const Carrier>();
  return empty;
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || *a == *b;
}

// FinFunction ---------------------------------------------------------------

FinFunction::FinFunction() : domain_(empty_carrier()), codomain_(empty_carrier()) {}

FinFunction::FinFunction(CarrierPtr domain, CarrierPtr codomain, std::vector<std::size_t> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_->size())
    throw InvalidNet("function image has wrong length");
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] >= codomain_->size())
      throw InvalidNet("function sends '" + (*domain_)[i] + "' outside its codomain");
}

FinFunction FinFunction::from_table(CarrierPtr domain, CarrierPtr codomain,
                                    const std::map<Atom, Atom>& table) {
  std::vector<std::size_t> image(domain->size());
  for (const auto& [from, to] : table) domain->index(from);
  for (std::size_t i = 0; i < domain->size(); ++i) {
    auto it = table.find((*domain)[i]);
    if (it == table.end()) throw InvalidNet("function undefined on '" + (*domain)[i] + "'");
    image[i] = codomain->index(it->second);
  }
  return FinFunction(std::move(domain), std::move(codomain), std::move(image));
}

FinFunction FinFunction::identity(CarrierPtr carrier) {
  std::vector<std::size_t> image(carrier->size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  return FinFunction(carrier, carrier, std::move(image));
}

FinFunction FinFunction::from_empty(CarrierPtr codomain) {
  return FinFunction(empty_carrier(), std::move(codomain), {});
}

const Atom& FinFunction::apply(std::string_view atom) const {
  return (*codomain_)[image_[domain_->index(atom)]];
}

bool FinFunction::is_injective() const {
  std::vector<bool> hit(codomain_->size(), false);
  for (auto j : image_) {
    if (hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

bool FinFunction::is_surjective() const {
  std::vector<bool> hit(codomain_->size(), false);
  for (auto j : image_) hit[j] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FinFunction FinFunction::inverse() const {
  if (!is_bijective()) throw Error("function is not invertible");
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return FinFunction(codomain_, domain_, std::move(inv));
}

std::map<Atom, Atom> FinFunction::table() const {
  std::map<Atom, Atom> out;
  for (std::size_t i = 0; i < image_.size(); ++i) out.emplace((*domain_)[i], (*codomain_)[image_[i]]);
  return out;
}

bool operator==(const FinFunction& a, const FinFunction& b) {
  return a.image_ == b.image_ && same_carrier(a.domain_, b.domain_) &&
         same_carrier(a.codomain_, b.codomain_);
}

FinFunction compose(const FinFunction& after, const FinFunction& before) {
  if (!same_carrier(before.codomain(), after.domain()))
    throw EndpointMismatch("cannot compose functions: middle carriers differ");
  std::vector<std::size_t> image(before.image().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = after(before(i));
  return FinFunction(before.domain(), after.codomain(), std::move(image));
}

// Multiset ------------------------------------------------------------------

namespace {

void require_same(const Multiset& a, const Multiset& b, const char* op) {
  if (!same_carrier(a.carrier(), b.carrier()))
    throw CarrierMismatch(std::string(op) + ": multisets have different carriers");
}

Count checked_add(Count x, Count y) {
  if (x > std::numeric_limits<Count>::max() - y) throw Error("token count overflow");
  return x + y;
}

}  // namespace

Multiset::Multiset() : carrier_(empty_carrier()) {}

Multiset::Multiset(CarrierPtr carrier)
    : carrier_(std::move(carrier)), counts_(carrier_->size(), 0) {}

Multiset::Multiset(CarrierPtr carrier, std::vector<Count> counts)
    : carrier_(std::move(carrier)), counts_(std::move(counts)) {
  if (counts_.size() != carrier_->size()) throw CarrierMismatch("count vector has wrong length");
}

Multiset::Multiset(CarrierPtr carrier, const AtomCounts& counts)
    : carrier_(std::move(carrier)), counts_(carrier_->size(), 0) {
  for (const auto& [atom, n] : counts) counts_[carrier_->index(atom)] = n;
}

Count Multiset::count(std::string_view atom) const {
  auto i = carrier_->find(atom);
  return i ? counts_[*i] : 0;
}

Count Multiset::total() const {
  Count sum = 0;
  for (auto c : counts_) sum = checked_add(sum, c);
  return sum;
}

bool Multiset::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c == 0; });
}

AtomCounts Multiset::to_counts() const {
  AtomCounts out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] != 0) out.emplace((*carrier_)[i], counts_[i]);
  return out;
}

std::string Multiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += (*carrier_)[i];
    if (counts_[i] != 1) out += ':' + std::to_string(counts_[i]);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const Multiset& a, const Multiset& b) {
  return a.counts_ == b.counts_ && same_carrier(a.carrier_, b.carrier_);
}

bool operator<(const Multiset& a, const Multiset& b) {
  if (a.carrier_ != b.carrier_ && *a.carrier_ != *b.carrier_)
    return a.carrier_->atoms() < b.carrier_->atoms();
  return a.counts_ < b.counts_;
}

Multiset empty(CarrierPtr carrier) { return Multiset(std::move(carrier)); }

Multiset add(const Multiset& a, const Multiset& b) {
  require_same(a, b, "add");
  std::vector<Count> out(a.counts().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return Multiset(a.carrier(), std::move(out));
}

std::optional<Multiset> subtract(const Multiset& a, const Multiset& b) {
  require_same(a, b, "subtract");
  std::vector<Count> out(a.counts().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (b[i] > a[i]) return std::nullopt;
    out[i] = a[i] - b[i];
  }
  return Multiset(a.carrier(), std::move(out));
}

bool leq(const Multiset& a, const Multiset& b) {
  require_same(a, b, "leq");
  for (std::size_t i = 0; i < a.counts().size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Multiset map(const FinFunction& f, const Multiset& a) {
  if (!same_carrier(f.domain(), a.carrier()))
    throw CarrierMismatch("map: function domain differs from multiset carrier");
  std::vector<Count> out(f.codomain()->size(), 0);
  for (std::size_t i = 0; i < a.counts().size(); ++i) out[f(i)] = checked_add(out[f(i)], a[i]);
  return Multiset(f.codomain(), std::move(out));
}

Multiset scale(Count k, const Multiset& a) {
  std::vector<Count> out(a.counts());
  for (auto& c : out) {
    if (c != 0 && k > std::numeric_limits<Count>::max() / c) throw Error("token count overflow");
    c *= k;
  }
  return Multiset(a.carrier(), std::move(out));
}

std::vector<Multiset> enumerate_bounded(const CarrierPtr& carrier, Count max_total) {
  std::vector<Multiset> out;
  const std::size_t n = carrier->size();
  std::vector<Count> cur(n, 0);
  for (Count total = 0; total <= max_total; ++total) {
    // compositions of `total` into n parts, first coordinate descending
    std::function<void(std::size_t, Count)> rec = [&](std::size_t i, Count left) {
      if (i + 1 >= n) {
        if (n == 0) {
          if (left == 0) out.emplace_back(carrier, cur);
          return;
        }
        cur[i] = left;
        out.emplace_back(carrier, cur);
        cur[i] = 0;
        return;
      }
      for (Count k = left + 1; k-- > 0;) {
        cur[i] = k;
        rec(i + 1, left - k);
      }
      cur[i] = 0;
    };
    rec(0, total);
  }
  return out;
}

std::size_t CountsHash::operator()(const std::vector<Count>& v) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto c : v) {
    h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t MultisetHash::operator()(const Multiset& m) const {
  return CountsHash{}(m.counts()) ^ (m.carrier()->size() * 0x100000001b3ull);
}

}  // namespace opn
