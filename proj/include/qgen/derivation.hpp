/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Coupled two-sided derivation. Both expressions of a question are built at
// once as a table of non-terminal instances; every instance carries a left
// form and a right form. Structural rules give an instance identical forms
// over shared children, law rules give it the two sides of a law. Each
// instance therefore denotes a left/right pair that is equivalent, and so does
// the root.

#ifndef QGEN_DERIVATION_HPP_
#define QGEN_DERIVATION_HPP_

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgen/error.hpp"
#include "qgen/grammar.hpp"
#include "qgen/hex_stream.hpp"

namespace qgen {

struct InstanceId {
  int value = 0;
  friend auto operator<=>(const InstanceId&, const InstanceId&) = default;
};

using Form = Term<InstanceId>;

enum class Side { kLeft, kRight };

struct Instance {
  enum class State { kUnexpanded, kLiteral, kExpanded };

  InstanceId id;
  State state = State::kUnexpanded;
  Form left;
  Form right;
  int depth = 0;

  const Form& form(Side side) const {
    return side == Side::kLeft ? left : right;
  }
};

struct RuleChoice {
  enum class Family { kStructural, kLaw };

  Family family = Family::kStructural;
  // StructuralKind value or law id.
  int rule = 0;

  static RuleChoice structural(StructuralKind kind) {
    return {Family::kStructural, static_cast<int>(kind)};
  }
  static RuleChoice law(int id) { return {Family::kLaw, id}; }

  bool is_law() const { return family == Family::kLaw; }
  StructuralKind structural_kind() const {
    return static_cast<StructuralKind>(rule);
  }
  const LawRule& law_rule() const { return law_table().at(rule); }

  friend bool operator==(const RuleChoice&, const RuleChoice&) = default;
};

struct TraceEntry {
  int step = 0;
  RuleChoice choice;
  InstanceId target;
  std::vector<InstanceId> created;
  // Digits drawn for the family and the rule; -1 when the entry was not
  // produced from a stream.
  int family_digit = -1;
  int rule_digit = -1;
  // Depth-forced literal closure or a forced follow-up law.
  bool forced = false;

  std::string rule_name() const {
    return choice.is_law()
               ? choice.law_rule().name
               : std::string(structural_name(choice.structural_kind()));
  }
  std::optional<Category> category() const {
    if (!choice.is_law()) return std::nullopt;
    return choice.law_rule().category();
  }

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Digits and flags recorded alongside an expansion.
struct StepInfo {
  int family_digit = -1;
  int rule_digit = -1;
  bool forced = false;
};

class PairedDerivation {
 public:
  PairedDerivation() { create(0); }

  InstanceId root() const { return InstanceId{0}; }
  const Instance& at(InstanceId id) const {
    return instances_.at(static_cast<std::size_t>(id.value));
  }
  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  int unexpanded_count() const { return unexpanded_; }
  bool complete() const { return unexpanded_ == 0; }

  std::vector<InstanceId> expand_structural(InstanceId target,
                                            StructuralKind kind,
                                            StepInfo info = {}) {
    Instance& node = require_unexpanded(target);
    const int depth = node.depth;
    std::vector<InstanceId> created;
    switch (kind) {
      case StructuralKind::kLiteral:
        mutable_at(target).state = Instance::State::kLiteral;
        break;
      case StructuralKind::kNot: {
        InstanceId child = create(depth + 1);
        created.push_back(child);
        Form f = Form::of_op(OpKind::kNot, {Form::of_hole(child)});
        finish(target, f, f);
        break;
      }
      case StructuralKind::kAnd:
      case StructuralKind::kOr:
      case StructuralKind::kImplies: {
        InstanceId a = create(depth + 1);
        InstanceId b = create(depth + 1);
        created = {a, b};
        Form f = Form::of_op(structural_op(kind),
                             {Form::of_hole(a), Form::of_hole(b)});
        finish(target, f, f);
        break;
      }
    }
    --unexpanded_;
    record(RuleChoice::structural(kind), target, created, info);
    return created;
  }

  // One fresh instance per distinct slot; repeated slots share it.
  std::vector<InstanceId> apply_law(InstanceId target, const LawRule& law,
                                    StepInfo info = {}) {
    const int depth = require_unexpanded(target).depth;
    std::array<InstanceId, 3> slot_ids{};
    std::vector<InstanceId> created;
    for (Slot s : law.slots()) {
      InstanceId id = create(depth + 1);
      slot_ids[static_cast<int>(s)] = id;
      created.push_back(id);
    }
    auto bind = [&](Slot s) { return slot_ids[static_cast<int>(s)]; };
    finish(target, map_holes(law.gamma1, bind), map_holes(law.gamma2, bind));
    --unexpanded_;
    record(RuleChoice::law(law.id), target, created, info);
    return created;
  }

  // Re-applies a recorded entry; the created ids must line up.
  void apply(const TraceEntry& entry) {
    if (entry.target.value < 0 ||
        entry.target.value >= static_cast<int>(instances_.size()) ||
        at(entry.target).state != Instance::State::kUnexpanded) {
      throw FormatError("trace step " + std::to_string(entry.step) +
                        " targets instance E" +
                        std::to_string(entry.target.value) +
                        " which is not an open non-terminal");
    }
    if (entry.choice.is_law() &&
        (entry.choice.rule < 0 || entry.choice.rule >= kLawRuleCount)) {
      throw FormatError("trace step " + std::to_string(entry.step) +
                        " names an unknown law");
    }
    StepInfo info{entry.family_digit, entry.rule_digit, entry.forced};
    std::vector<InstanceId> created =
        entry.choice.is_law()
            ? apply_law(entry.target, entry.choice.law_rule(), info)
            : expand_structural(entry.target, entry.choice.structural_kind(),
                                info);
    if (created != entry.created) {
      throw FormatError("trace step " + std::to_string(entry.step) +
                        " created ids do not match the replay");
    }
  }

  // Literal and constant occurrences reachable on `side`. A shared instance
  // counts once per occurrence. With `count_open`, each open non-terminal
  // occurrence counts as one leaf, giving a lower bound on the final count.
  int leaf_count(Side side, bool count_open = false) const {
    std::vector<int> memo(instances_.size(), -1);
    return count_instance(root(), side, count_open, memo);
  }

 private:
  Instance& mutable_at(InstanceId id) {
    return instances_.at(static_cast<std::size_t>(id.value));
  }

  Instance& require_unexpanded(InstanceId id) {
    Instance& node = mutable_at(id);
    if (node.state != Instance::State::kUnexpanded) {
      throw Error("instance E" + std::to_string(id.value) +
                  " is already expanded");
    }
    return node;
  }

  InstanceId create(int depth) {
    InstanceId id{static_cast<int>(instances_.size())};
    instances_.push_back(Instance{id, Instance::State::kUnexpanded, {}, {},
                                  depth});
    ++unexpanded_;
    return id;
  }

  void finish(InstanceId id, Form left, Form right) {
    Instance& node = mutable_at(id);
    node.state = Instance::State::kExpanded;
    node.left = std::move(left);
    node.right = std::move(right);
  }

  void record(RuleChoice choice, InstanceId target,
              std::vector<InstanceId> created, StepInfo info) {
    trace_.push_back(TraceEntry{static_cast<int>(trace_.size()), choice,
                                target, std::move(created), info.family_digit,
                                info.rule_digit, info.forced});
  }

  int count_instance(InstanceId id, Side side, bool count_open,
                     std::vector<int>& memo) const {
    int& slot = memo[static_cast<std::size_t>(id.value)];
    if (slot >= 0) return slot;
    const Instance& node = at(id);
    switch (node.state) {
      case Instance::State::kUnexpanded:
        slot = count_open ? 1 : 0;
        break;
      case Instance::State::kLiteral:
        slot = 1;
        break;
      case Instance::State::kExpanded:
        slot = count_form(node.form(side), side, count_open, memo);
        break;
    }
    return slot;
  }

  int count_form(const Form& f, Side side, bool count_open,
                 std::vector<int>& memo) const {
    switch (f.kind) {
      case Form::Kind::kHole:
        return count_instance(f.hole, side, count_open, memo);
      case Form::Kind::kConst:
        return 1;
      case Form::Kind::kOp: {
        int n = 0;
        for (const Form& c : f.children) n += count_form(c, side, count_open, memo);
        return n;
      }
    }
    return 0;
  }

  std::vector<Instance> instances_;
  std::vector<TraceEntry> trace_;
  int unexpanded_ = 0;
};

inline PairedDerivation replay(std::span<const TraceEntry> trace) {
  PairedDerivation d;
  for (const TraceEntry& e : trace) d.apply(e);
  return d;
}

// ---------------------------------------------------------------------------
// Difficulty control

// Instructor hyperparameters.
struct DifficultyConfig {
  double p_law_init = 0.25;
  double p_law_step = 0.125;
  int min_leaf_count = 4;
  double p_literal_boost = 0.25;
  std::array<int, kCategoryCount> quotas = {1, 1, 1};  // easy, median, hard
  int max_laws = 3;
  int max_depth = 8;
  int pool_size = 3;
  int offset = kDefaultOffset;
  RuleOrdering structural_order{kStructuralRuleCount};
  RuleOrdering law_order{kLawRuleCount};

  void validate() const {
    auto probability = [](const char* name, double v) {
      if (!(v >= 0.0 && v < 1.0)) {
        throw ConfigError(std::string(name) + " must lie in [0, 1)");
      }
    };
    probability("p_law_init", p_law_init);
    probability("p_law_step", p_law_step);
    probability("p_literal_boost", p_literal_boost);
    if (min_leaf_count < 1) throw ConfigError("min_leaf_count must be >= 1");
    if (max_depth < 2) throw ConfigError("max_depth must be >= 2");
    if (max_laws < 0) throw ConfigError("max_laws must be >= 0");
    int total = 0;
    for (int q : quotas) {
      if (q < 0) throw ConfigError("category quotas must be >= 0");
      total += q;
    }
    if (total > max_laws) {
      throw ConfigError("category quotas sum to " + std::to_string(total) +
                        ", more than max_laws = " + std::to_string(max_laws));
    }
    if (pool_size < 1 || pool_size > 8) {
      throw ConfigError("pool_size must be between 1 and 8");
    }
    if (offset < 1 || offset % 2 == 0) {
      throw ConfigError("offset must be a positive odd integer");
    }
    if (structural_order.size() != kStructuralRuleCount ||
        law_order.size() != kLawRuleCount) {
      throw ConfigError("rule orderings must be permutations of the rules");
    }
  }
};

// Law probability never reaches one so structural rules keep a digit.
constexpr double kMaxLawProbability = 15.0 / 16.0;

struct GenState {
  double p_law_current = 0.0;
  int laws_applied = 0;
  std::array<int, kCategoryCount> quota_remaining{};
  // Instances created by an operand swap; the next expansion of one of them
  // must be a follow-up law. Empty when no follow-up is due.
  std::vector<InstanceId> followup_due;

  static GenState initial(const DifficultyConfig& config) {
    GenState s;
    s.p_law_current = config.p_law_init;
    s.quota_remaining = config.quotas;
    return s;
  }

  bool followup_at(InstanceId id) const {
    return std::find(followup_due.begin(), followup_due.end(), id) !=
           followup_due.end();
  }
};

// Whether `law` may be applied at `target` in the current state.
inline bool law_eligible(const LawRule& law, const GenState& state,
                         const DifficultyConfig& config,
                         const Instance& target) {
  const auto cat = static_cast<std::size_t>(law.category());
  if (target.depth >= config.max_depth) return false;
  if (state.laws_applied >= config.max_laws) return false;
  if (state.quota_remaining[cat] <= 0) return false;
  if (!state.followup_due.empty()) {
    if (!state.followup_at(target.id) || !is_follow_up(law.family)) {
      return false;
    }
  }
  if (is_swap(law.family)) {
    // The swap's first child must be able to host a follow-up law.
    if (state.laws_applied + 2 > config.max_laws) return false;
    if (target.depth + 1 >= config.max_depth) return false;
    std::array<int, kCategoryCount> after = state.quota_remaining;
    --after[cat];
    bool hostable = false;
    for (const LawRule& f : law_table()) {
      if (is_follow_up(f.family) &&
          after[static_cast<std::size_t>(f.category())] > 0) {
        hostable = true;
      }
    }
    if (!hostable) return false;
  }
  return true;
}

inline bool any_law_eligible(const GenState& state,
                             const DifficultyConfig& config,
                             const Instance& target) {
  for (const LawRule& law : law_table()) {
    if (law_eligible(law, state, config, target)) return true;
  }
  return false;
}

struct FamilyDecision {
  RuleChoice::Family family = RuleChoice::Family::kStructural;
  bool forced = false;
};

// Decides between a structural rule and a law for `target`, then updates the
// law probability ramp. Digits below 16 * (1 - p_law_current) select a
// structural rule.
inline FamilyDecision choose_family(int digit, GenState& state,
                                    const DifficultyConfig& config,
                                    const Instance& target) {
  FamilyDecision d;
  if (target.depth >= config.max_depth) {
    d.forced = true;
  } else if (state.followup_at(target.id) &&
             any_law_eligible(state, config, target)) {
    d.family = RuleChoice::Family::kLaw;
    d.forced = true;
  } else if (digit >= 16.0 * (1.0 - state.p_law_current) &&
             any_law_eligible(state, config, target)) {
    d.family = RuleChoice::Family::kLaw;
  }

  if (d.family == RuleChoice::Family::kLaw) {
    state.p_law_current = config.p_law_init;
  } else {
    state.p_law_current =
        std::min(state.p_law_current + config.p_law_step, kMaxLawProbability);
  }
  return d;
}

// Selection shares of the structural rules, indexed by selection order.
inline std::array<double, kStructuralRuleCount> structural_shares(
    const DifficultyConfig& config, bool boosted, bool literal_allowed) {
  const int literal_order =
      config.structural_order.order_of(static_cast<int>(StructuralKind::kLiteral));
  constexpr double kOthers = kStructuralRuleCount - 1;
  double literal = 1.0 / kStructuralRuleCount;
  if (!literal_allowed) {
    literal = 0.0;
  } else if (boosted) {
    literal = std::min(literal + config.p_literal_boost, kMaxLawProbability);
  }
  std::array<double, kStructuralRuleCount> shares{};
  for (int o = 0; o < kStructuralRuleCount; ++o) {
    shares[o] = o == literal_order ? literal : (1.0 - literal) / kOthers;
  }
  return shares;
}

// Smallest order whose cumulative digit interval contains `digit`. With equal
// shares this is select_rule(digit, 5).
inline StructuralKind select_structural(int digit,
                                        const DifficultyConfig& config,
                                        bool boosted, bool literal_allowed) {
  const auto shares = structural_shares(config, boosted, literal_allowed);
  double cumulative = 0.0;
  int chosen = -1;
  for (int o = 0; o < kStructuralRuleCount; ++o) {
    if (shares[o] <= 0.0) continue;
    cumulative += shares[o];
    chosen = o;
    if (digit < 16.0 * cumulative) break;
  }
  return static_cast<StructuralKind>(config.structural_order.rule_at(chosen));
}

// Law at the digit's bucket, or the next eligible one in selection order.
inline const LawRule* select_law(int digit, const GenState& state,
                                 const DifficultyConfig& config,
                                 const Instance& target) {
  const int start = select_rule(digit, kLawRuleCount);
  for (int i = 0; i < kLawRuleCount; ++i) {
    const int order = (start + i) % kLawRuleCount;
    const LawRule& law = law_table().at(config.law_order.rule_at(order));
    if (law_eligible(law, state, config, target)) return &law;
  }
  return nullptr;
}

// The LITERAL rule is withheld while closing the last open non-terminal would
// leave the left side shorter than min_leaf_count.
inline bool literal_allowed(const PairedDerivation& deriv,
                            const DifficultyConfig& config) {
  return deriv.unexpanded_count() > 1 ||
         deriv.leaf_count(Side::kLeft, true) >= config.min_leaf_count;
}

inline bool literal_boosted(const PairedDerivation& deriv,
                            const DifficultyConfig& config) {
  return deriv.leaf_count(Side::kLeft) >= config.min_leaf_count;
}

namespace detail {

inline void note_law(GenState& state, const LawRule& law, InstanceId target,
                     const std::vector<InstanceId>& created) {
  ++state.laws_applied;
  --state.quota_remaining[static_cast<std::size_t>(law.category())];
  if (state.followup_at(target)) state.followup_due.clear();
  if (is_swap(law.family)) state.followup_due = created;
}

}  // namespace detail

// Runs the coupled derivation to completion. Non-terminals are expanded in
// depth-first order, two digits per expansion. `script`, when given, overrides
// the first script.size() rule choices; digits are still consumed.
inline PairedDerivation generate(HexStream& stream,
                                 const DifficultyConfig& config,
                                 std::span<const RuleChoice> script = {}) {
  config.validate();
  PairedDerivation deriv;
  GenState state = GenState::initial(config);
  std::vector<InstanceId> work = {deriv.root()};
  std::size_t step = 0;

  while (!work.empty()) {
    const InstanceId target = work.back();
    work.pop_back();
    const Instance& node = deriv.at(target);
    const int family_digit = stream.next();
    const int rule_digit = stream.next();
    StepInfo info{family_digit, rule_digit, false};

    std::vector<InstanceId> created;
    if (step < script.size()) {
      // Scripted choices are not derived from the digits.
      info = StepInfo{};
      const RuleChoice& choice = script[step];
      if (choice.is_law()) {
        const LawRule& law = choice.law_rule();
        state.p_law_current = config.p_law_init;
        created = deriv.apply_law(target, law, info);
        detail::note_law(state, law, target, created);
      } else {
        state.p_law_current = std::min(
            state.p_law_current + config.p_law_step, kMaxLawProbability);
        created = deriv.expand_structural(target, choice.structural_kind(),
                                          info);
      }
    } else {
      const FamilyDecision decision =
          choose_family(family_digit, state, config, node);
      info.forced = decision.forced;
      if (decision.family == RuleChoice::Family::kLaw) {
        const LawRule* law = select_law(rule_digit, state, config, node);
        assert(law != nullptr);
        created = deriv.apply_law(target, *law, info);
        detail::note_law(state, *law, target, created);
      } else {
        StructuralKind kind = StructuralKind::kLiteral;
        if (!decision.forced) {
          kind = select_structural(rule_digit, config,
                                   literal_boosted(deriv, config),
                                   literal_allowed(deriv, config));
        }
        created = deriv.expand_structural(target, kind, info);
      }
    }
    ++step;
    for (auto it = created.rbegin(); it != created.rend(); ++it) {
      work.push_back(*it);
    }
  }
  return deriv;
}

// ---------------------------------------------------------------------------
// Audit

// Checks a completed derivation against the difficulty controls and returns
// one message per violation. The trace is replayed against a fresh derivation
// and controller state, so every recorded decision is re-derived from its
// digits.
inline std::vector<std::string> audit(const PairedDerivation& deriv,
                                      const DifficultyConfig& config) {
  std::vector<std::string> out;
  const auto& trace = deriv.trace();
  auto where = [](const TraceEntry& e) {
    return "step " + std::to_string(e.step) + " (" + e.rule_name() + " at E" +
           std::to_string(e.target.value) + "): ";
  };

  if (!deriv.complete()) out.push_back("derivation has open non-terminals");
  if (trace.empty()) out.push_back("trace is empty");

  std::array<int, kCategoryCount> used{};
  int laws = 0;
  bool depth_forced = false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceEntry& e = trace[i];
    if (!e.choice.is_law()) {
      if (e.forced) depth_forced = true;
      continue;
    }
    ++laws;
    ++used[static_cast<std::size_t>(*e.category())];
    if (is_swap(e.choice.law_rule().family)) {
      const TraceEntry* next = i + 1 < trace.size() ? &trace[i + 1] : nullptr;
      if (next == nullptr || !next->choice.is_law() ||
          !is_follow_up(next->choice.law_rule().family) ||
          std::find(e.created.begin(), e.created.end(), next->target) ==
              e.created.end()) {
        out.push_back(where(e) + "operand swap not directly followed by a "
                                 "follow-up law on one of its operands");
      }
    }
  }
  if (laws > config.max_laws) {
    out.push_back(std::to_string(laws) + " laws applied, max_laws is " +
                  std::to_string(config.max_laws));
  }
  for (int c = 0; c < kCategoryCount; ++c) {
    if (used[c] > config.quotas[c]) {
      out.push_back(std::string(category_name(static_cast<Category>(c))) +
                    " laws applied " + std::to_string(used[c]) +
                    " times, quota is " + std::to_string(config.quotas[c]));
    }
  }
  const int left_leaves = deriv.leaf_count(Side::kLeft);
  if (left_leaves < config.min_leaf_count && !depth_forced) {
    out.push_back("left side has " + std::to_string(left_leaves) +
                  " leaves, minimum is " +
                  std::to_string(config.min_leaf_count));
  }

  // Replay: each stream-drawn decision must follow from its digits.
  PairedDerivation partial;
  GenState state = GenState::initial(config);
  for (const TraceEntry& e : trace) {
    if (e.target.value >= static_cast<int>(partial.instances().size())) {
      out.push_back(where(e) + "target does not exist");
      break;
    }
    const Instance node = partial.at(e.target);
    if (e.family_digit >= 0 && e.rule_digit >= 0) {
      GenState probe = state;
      const FamilyDecision d = choose_family(e.family_digit, probe, config, node);
      if (d.family != e.choice.family || d.forced != e.forced) {
        out.push_back(where(e) + "family does not follow from digit " +
                      std::to_string(e.family_digit));
      } else if (e.choice.is_law()) {
        const LawRule* law = select_law(e.rule_digit, state, config, node);
        if (law == nullptr || law->id != e.choice.rule) {
          out.push_back(where(e) + "law does not follow from digit " +
                        std::to_string(e.rule_digit));
        }
      } else if (!e.forced) {
        const StructuralKind expected = select_structural(
            e.rule_digit, config, literal_boosted(partial, config),
            literal_allowed(partial, config));
        if (expected != e.choice.structural_kind()) {
          out.push_back(where(e) + "structural rule does not follow from "
                                   "digit " + std::to_string(e.rule_digit));
        }
      } else if (e.choice.structural_kind() != StructuralKind::kLiteral) {
        out.push_back(where(e) + "depth-forced step is not a literal");
      }
      state = probe;
    } else if (e.choice.is_law()) {
      state.p_law_current = config.p_law_init;
    } else {
      state.p_law_current =
          std::min(state.p_law_current + config.p_law_step, kMaxLawProbability);
    }
    try {
      partial.apply(e);
    } catch (const Error& err) {
      out.push_back(where(e) + err.what());
      break;
    }
    if (e.choice.is_law()) {
      detail::note_law(state, e.choice.law_rule(), e.target, e.created);
    }
  }
  return out;
}

}  // namespace qgen

#endif  // QGEN_DERIVATION_HPP_
