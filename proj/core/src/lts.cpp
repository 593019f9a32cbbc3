#include "topomon/lts.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>

#include "topomon/classify.hpp"
#include "topomon/errors.hpp"
#include "topomon/rng.hpp"

namespace topomon {

TransitionSystem::TransitionSystem(std::size_t n_states, std::vector<std::string> alphabet,
                                   std::vector<Triple> triples)
    : n_states_(n_states), alphabet_(std::move(alphabet)), triples_(std::move(triples)) {
  for (const Triple& t : triples_) {
    if (t.src >= n_states_ || t.dst >= n_states_)
      throw std::invalid_argument("transition mentions a state out of range");
    if (t.event >= alphabet_.size())
      throw std::invalid_argument("transition mentions an event out of range");
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

  events_by_name_.resize(alphabet_.size());
  std::iota(events_by_name_.begin(), events_by_name_.end(), 0);
  std::sort(events_by_name_.begin(), events_by_name_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return alphabet_[a] < alphabet_[b]; });

  successors_.assign(alphabet_.size(), std::vector<PointSet>(n_states_, PointSet(n_states_)));
  for (const Triple& t : triples_) successors_[t.event][t.src].set(t.dst);
}

PointSet TransitionSystem::pre(std::uint32_t event, const PointSet& u) const {
  PointSet out(n_states_);
  const auto& succ = successors_.at(event);
  for (std::size_t q = 0; q < n_states_; ++q)
    if (succ[q].intersects(u)) out.set(q);
  return out;
}

std::string event_string_to_string(const TransitionSystem& t, const EventString& s) {
  if (s.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '.';
    out += t.alphabet()[s[i]];
  }
  return out;
}

bool SubbasisFamily::contains(const PointSet& u) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const SubbasisEntry& e) { return e.set == u; });
}

SubbasisFamily subbasis(const TransitionSystem& t) {
  SubbasisFamily family;
  std::map<PointSet, std::size_t> seen;

  PointSet full = ~PointSet(t.n_states());
  seen.emplace(full, 0);
  family.entries.push_back(SubbasisEntry{std::move(full), {}});

  // Level-synchronous BFS over strings: all strings of length L+1 are e·s for
  // a length-L string s, and generating them with e outermost in name order
  // and parents in discovery order yields candidates in lexicographic order,
  // so the first witness of a set is a shortest one with the right tie-break.
  std::vector<std::size_t> level(1, 0);
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::uint32_t e : t.events_by_name()) {
      for (std::size_t idx : level) {
        PointSet v = t.pre(e, family.entries[idx].set);
        if (seen.count(v)) continue;
        EventString w;
        w.reserve(family.entries[idx].witness.size() + 1);
        w.push_back(e);
        w.insert(w.end(), family.entries[idx].witness.begin(),
                 family.entries[idx].witness.end());
        seen.emplace(v, family.entries.size());
        next.push_back(family.entries.size());
        family.entries.push_back(SubbasisEntry{std::move(v), std::move(w)});
      }
    }
    level = std::move(next);
  }
  return family;
}

PointSet string_set(const TransitionSystem& t, const EventString& s) {
  PointSet u = ~PointSet(t.n_states());
  for (auto it = s.rbegin(); it != s.rend(); ++it) u = t.pre(*it, u);
  return u;
}

namespace {

/// Minimal basic open of each state: the intersection of all executability
/// sets containing it. U_ε contains everything, so the intersection is over a
/// non-empty collection.
std::vector<PointSet> minimal_basic_opens(const TransitionSystem& t, const SubbasisFamily& fam) {
  std::vector<PointSet> mo(t.n_states(), ~PointSet(t.n_states()));
  for (const SubbasisEntry& entry : fam.entries)
    for (std::size_t q = 0; q < t.n_states(); ++q)
      if (entry.set.test(q)) mo[q] &= entry.set;
  return mo;
}

}  // namespace

FiniteSpace induced_space(const TransitionSystem& t) {
  return FiniteSpace(minimal_basic_opens(t, subbasis(t)));
}

bool is_hyperconnected_lts(const TransitionSystem& t) {
  const auto mo = minimal_basic_opens(t, subbasis(t));
  for (std::size_t x = 0; x < mo.size(); ++x)
    for (std::size_t y = x + 1; y < mo.size(); ++y)
      if (!mo[x].intersects(mo[y])) return false;
  return true;
}

TransitionSystem extend_to_hyperconnected(const std::vector<Triple>& required,
                                          const std::vector<Triple>& forbidden,
                                          std::size_t n_states,
                                          std::vector<std::string> alphabet) {
  for (const Triple& r : required)
    if (std::find(forbidden.begin(), forbidden.end(), r) != forbidden.end())
      throw std::invalid_argument("a triple is both required and forbidden");

  std::vector<bool> mentioned(n_states, false);
  for (const auto* constraint : {&required, &forbidden})
    for (const Triple& t : *constraint) {
      if (t.src >= n_states || t.dst >= n_states)
        throw std::invalid_argument("constraint mentions a state out of range");
      mentioned[t.src] = true;
      mentioned[t.dst] = true;
    }

  std::size_t fresh = 0;
  while (fresh < n_states && mentioned[fresh]) ++fresh;
  if (fresh == n_states)
    throw NoFreshStateError("every state occurs in a required or forbidden triple");

  std::vector<Triple> triples = required;
  for (std::uint32_t e = 0; e < alphabet.size(); ++e)
    triples.push_back(Triple{static_cast<std::uint32_t>(fresh), e,
                             static_cast<std::uint32_t>(fresh)});
  return TransitionSystem(n_states, std::move(alphabet), std::move(triples));
}

namespace {

struct SampleOutcome {
  bool hyperconnected = false;
  bool sigma02_or_lower = false;
};

SampleOutcome evaluate_sample(std::size_t n_states, const std::vector<std::string>& alphabet,
                              double p, std::uint64_t sample_seed) {
  SplitMix64 g(sample_seed);
  std::vector<Triple> triples;
  for (std::uint32_t q = 0; q < n_states; ++q)
    for (std::uint32_t e = 0; e < alphabet.size(); ++e)
      for (std::uint32_t r = 0; r < n_states; ++r)
        if (g.next_unit() < p) triples.push_back(Triple{q, e, r});

  TransitionSystem t(n_states, alphabet, std::move(triples));
  SampleOutcome out;
  out.hyperconnected = is_hyperconnected_lts(t);
  const ComplexityVerdict v = classify(*finite_presentation(induced_space(t)), 1);
  out.sigma02_or_lower = (v.tag == ClassTag::Sigma02Branch || v.tag == ClassTag::AllSets);
  return out;
}

}  // namespace

GenericityReport genericity_sample(std::size_t n_states, const std::vector<std::string>& alphabet,
                                   double p, std::size_t samples, std::uint64_t seed,
                                   unsigned jobs) {
  if (samples == 0) throw std::invalid_argument("genericity_sample: samples must be at least 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("genericity_sample: p must lie in [0,1]");

  std::vector<SampleOutcome> outcomes(samples);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      outcomes[i] = evaluate_sample(n_states, alphabet, p, derive_stream_seed(seed, i));
  };

  if (jobs <= 1) {
    run_range(0, samples);
  } else {
    const std::size_t chunk = (samples + jobs - 1) / jobs;
    std::vector<std::future<void>> work;
    for (std::size_t begin = 0; begin < samples; begin += chunk)
      work.push_back(std::async(std::launch::async, run_range, begin,
                                std::min(begin + chunk, samples)));
    for (auto& w : work) w.get();
  }

  GenericityReport report;
  report.p = p;
  report.samples = samples;
  report.seed = seed;
  std::size_t hyper = 0, simple = 0;
  for (const SampleOutcome& o : outcomes) {
    hyper += o.hyperconnected;
    simple += o.sigma02_or_lower;
  }
  report.hyperconnected_fraction = static_cast<double>(hyper) / static_cast<double>(samples);
  report.sigma02_fraction = static_cast<double>(simple) / static_cast<double>(samples);
  return report;
}

}  // namespace topomon
