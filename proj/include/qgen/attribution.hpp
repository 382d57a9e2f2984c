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

// Attribute evaluation over a completed derivation. Every grammar symbol gets
// two synthesized attributes: `exp`, the expression it produces, and `pre`,
// the binding power of its top operator (kLeafBindingPower for variables and
// constants). One memoized depth-first pass per side computes them, so an
// instance shared by several occurrences is evaluated once.

#ifndef QGEN_ATTRIBUTION_HPP_
#define QGEN_ATTRIBUTION_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/derivation.hpp"
#include "qgen/logic.hpp"

namespace qgen {

constexpr std::array<std::string_view, 8> kVariablePool = {
    "p", "q", "r", "s", "t", "u", "v", "w"};

// Variable name per instance id; set only for literal instances.
using LiteralAssignment = std::vector<std::optional<std::string>>;

// Draws one variable per literal instance, in instance-id order, continuing
// on the stream the derivation consumed.
inline LiteralAssignment assign_literals(const PairedDerivation& deriv,
                                         HexStream& stream, int pool_size) {
  if (pool_size < 1 || pool_size > static_cast<int>(kVariablePool.size())) {
    throw ConfigError("pool_size must be between 1 and 8");
  }
  LiteralAssignment out(deriv.instances().size());
  for (const Instance& node : deriv.instances()) {
    if (node.state != Instance::State::kLiteral) continue;
    out[static_cast<std::size_t>(node.id.value)] =
        std::string(kVariablePool[stream.next() % pool_size]);
  }
  return out;
}

constexpr std::array<Syntax, 3> kAllSyntaxes = {Syntax::kUnicode,
                                                Syntax::kAscii, Syntax::kLatex};

struct AttrCell {
  Proposition exp = top();
  int pre = kLeafBindingPower;
  std::array<std::string, 3> text;  // indexed by Syntax

  const std::string& text_in(Syntax s) const {
    return text[static_cast<std::size_t>(s)];
  }
};

struct RenderedPair {
  Proposition lhs = top();
  Proposition rhs = top();
  std::array<std::string, 3> lhs_text;  // indexed by Syntax
  std::array<std::string, 3> rhs_text;

  const std::string& lhs_in(Syntax s) const {
    return lhs_text[static_cast<std::size_t>(s)];
  }
  const std::string& rhs_in(Syntax s) const {
    return rhs_text[static_cast<std::size_t>(s)];
  }
};

namespace detail {

class AttributeEvaluator {
 public:
  AttributeEvaluator(const PairedDerivation& deriv,
                     const LiteralAssignment& literals, Side side)
      : deriv_(deriv),
        literals_(literals),
        side_(side),
        memo_(deriv.instances().size()) {}

  // Instances evaluated so far; each is evaluated at most once.
  int visits() const { return visits_; }

  const AttrCell& instance(InstanceId id) {
    auto& slot = memo_.at(static_cast<std::size_t>(id.value));
    if (slot) return *slot;
    const Instance& node = deriv_.at(id);
    ++visits_;
    switch (node.state) {
      case Instance::State::kUnexpanded:
        throw Error("instance E" + std::to_string(id.value) +
                    " is still open");
      case Instance::State::kLiteral: {
        const auto& name = literals_.size() > static_cast<std::size_t>(id.value)
                               ? literals_[static_cast<std::size_t>(id.value)]
                               : std::nullopt;
        if (!name) {
          throw Error("literal E" + std::to_string(id.value) +
                      " has no variable assigned");
        }
        slot = AttrCell{var(*name), kLeafBindingPower, {*name, *name, *name}};
        break;
      }
      case Instance::State::kExpanded:
        slot = form(node.form(side_));
        break;
    }
    return *slot;
  }

 private:
  AttrCell form(const Form& f) {
    switch (f.kind) {
      case Form::Kind::kHole:
        return instance(f.hole);
      case Form::Kind::kConst: {
        const std::string t = f.value ? "T" : "F";
        return AttrCell{Proposition::constant(f.value), kLeafBindingPower,
                        {t, t, t}};
      }
      case Form::Kind::kOp:
        break;
    }
    AttrCell out;
    out.pre = binding_power(f.op);
    if (f.op == OpKind::kNot) {
      AttrCell operand = form(f.children[0]);
      out.exp = neg(operand.exp);
      for (Syntax s : kAllSyntaxes) {
        out.text[static_cast<std::size_t>(s)] =
            compose_unary(s, operand.text_in(s), operand.pre);
      }
      return out;
    }
    AttrCell a = form(f.children[0]);
    AttrCell b = form(f.children[1]);
    out.exp = Proposition::binary(f.op, a.exp, b.exp);
    for (Syntax s : kAllSyntaxes) {
      out.text[static_cast<std::size_t>(s)] = compose_binary(
          f.op, s, a.text_in(s), a.pre, b.text_in(s), b.pre);
    }
    return out;
  }

  const PairedDerivation& deriv_;
  const LiteralAssignment& literals_;
  Side side_;
  int visits_ = 0;
  std::vector<std::optional<AttrCell>> memo_;
};

}  // namespace detail

// Attributes of the root on one side.
inline AttrCell evaluate_side(const PairedDerivation& deriv,
                              const LiteralAssignment& literals, Side side) {
  detail::AttributeEvaluator eval(deriv, literals, side);
  return eval.instance(deriv.root());
}

inline RenderedPair extract_pair(const PairedDerivation& deriv,
                                 const LiteralAssignment& literals) {
  AttrCell l = evaluate_side(deriv, literals, Side::kLeft);
  AttrCell r = evaluate_side(deriv, literals, Side::kRight);
  return RenderedPair{std::move(l.exp), std::move(r.exp), std::move(l.text),
                      std::move(r.text)};
}

}  // namespace qgen

#endif  // QGEN_ATTRIBUTION_HPP_
