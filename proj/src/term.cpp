#include "ordalg/term.hpp"

#include <algorithm>
#include <cctype>

namespace ordalg {

  Term Term::variable(std::string name) {
    Term t;
    t.variable_ = true;
    t.symbol_   = std::move(name);
    return t;
  }

  Term Term::apply(std::string op, std::vector<Term> args) {
    Term t;
    t.variable_ = false;
    t.symbol_   = std::move(op);
    t.args_     = std::move(args);
    return t;
  }

  std::size_t Term::depth() const noexcept {
    if (variable_) {
      return 0;
    }
    std::size_t d = 0;
    for (auto const& a : args_) {
      d = std::max(d, a.depth());
    }
    return d + 1;
  }

  std::string Term::to_string() const {
    if (variable_ || args_.empty()) {
      return symbol_;
    }
    std::string s = symbol_ + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
      s += (i ? "," : "") + args_[i].to_string();
    }
    return s + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TermReader {
     public:
      TermReader(std::string_view                text,
                 Signature const&                sig,
                 std::vector<std::string> const& vars)
          : text_(text), sig_(sig), vars_(vars) {}

      Term read() {
        Term t = term();
        skip_space();
        if (pos_ != text_.size()) {
          fail("unexpected trailing input");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw InputError("term \"" + std::string(text_) + "\": " + what + " at position "
                         + std::to_string(pos_));
      }

      void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      std::string identifier() {
        skip_space();
        auto start = pos_;
        while (pos_ < text_.size()) {
          char c = text_[pos_];
          if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
            ++pos_;
          } else {
            break;
          }
        }
        if (start == pos_) {
          fail("expected an identifier");
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      Term term() {
        auto name   = identifier();
        bool is_var = std::find(vars_.begin(), vars_.end(), name) != vars_.end();
        auto op     = sig_.find(name);
        if (is_var && op) {
          fail("\"" + name + "\" is both a variable and an operation");
        }
        if (is_var) {
          if (accept('(')) {
            fail("variable \"" + name + "\" applied to arguments");
          }
          return Term::variable(name);
        }
        if (!op) {
          fail("unknown symbol \"" + name + "\"");
        }
        std::size_t const arity = sig_[*op].arity;
        std::vector<Term> args;
        if (accept('(')) {
          if (!accept(')')) {
            do {
              args.push_back(term());
            } while (accept(','));
            if (!accept(')')) {
              fail("expected ')'");
            }
          }
        }
        if (args.size() != arity) {
          fail("\"" + name + "\" expects " + std::to_string(arity) + " arguments, got "
               + std::to_string(args.size()));
        }
        return Term::apply(name, std::move(args));
      }

      std::string_view                text_;
      Signature const&                sig_;
      std::vector<std::string> const& vars_;
      std::size_t                     pos_ = 0;
    };
  }  // namespace

  Term parse_term(std::string_view                text,
                  Signature const&                signature,
                  std::vector<std::string> const& variables) {
    return TermReader(text, signature, variables).read();
  }

  ////////////////////////////////////////////////////////////////////////
  // Free terms
  ////////////////////////////////////////////////////////////////////////

  std::vector<Term> free_terms(Signature const&                signature,
                               std::vector<std::string> const& variables,
                               std::size_t                     depth,
                               std::size_t                     cap) {
    std::vector<Term> terms;
    for (auto const& x : variables) {
      terms.push_back(Term::variable(x));
    }
    if (terms.size() > cap) {
      throw ResourceError("free term enumeration exceeds the cap of " + std::to_string(cap));
    }
    std::vector<std::size_t> depth_of(terms.size(), 0);
    for (std::size_t d = 1; d <= depth; ++d) {
      std::size_t const previous = terms.size();
      for (auto const& op : signature.operations()) {
        if (op.arity == 0) {
          if (d == 1) {
            terms.push_back(Term::apply(op.name, {}));
            depth_of.push_back(1);
          }
          continue;
        }
        if (previous == 0) {
          continue;
        }
        std::vector<std::size_t> pick(op.arity, 0);
        while (true) {
          bool fresh = std::any_of(pick.begin(), pick.end(),
                                   [&](std::size_t i) { return depth_of[i] == d - 1; });
          if (fresh) {
            std::vector<Term> args;
            for (auto i : pick) {
              args.push_back(terms[i]);
            }
            terms.push_back(Term::apply(op.name, std::move(args)));
            depth_of.push_back(d);
            if (terms.size() > cap) {
              throw ResourceError("free term enumeration exceeds the cap of "
                                  + std::to_string(cap));
            }
          }
          std::size_t k = op.arity;
          while (k > 0 && ++pick[k - 1] == previous) {
            pick[k - 1] = 0;
            --k;
          }
          if (k == 0) {
            break;
          }
        }
      }
    }
    return terms;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation and satisfaction
  ////////////////////////////////////////////////////////////////////////

  std::size_t evaluate(Term const& t, OrderedAlgebra const& a, Valuation const& valuation) {
    if (t.is_variable()) {
      auto it = valuation.find(t.symbol());
      if (it == valuation.end()) {
        throw InputError("valuation does not assign variable \"" + t.symbol() + "\"");
      }
      if (it->second >= a.size()) {
        throw InputError("valuation of \"" + t.symbol() + "\" is outside the carrier");
      }
      return it->second;
    }
    auto op = a.signature().find(t.symbol());
    if (!op) {
      throw InputError("unknown operation \"" + t.symbol() + "\"");
    }
    if (a.signature()[*op].arity != t.args().size()) {
      throw InputError("arity mismatch for \"" + t.symbol() + "\"");
    }
    std::vector<std::size_t> args;
    args.reserve(t.args().size());
    for (auto const& s : t.args()) {
      args.push_back(evaluate(s, a, valuation));
    }
    return a.apply(*op, args);
  }

  Check satisfies(OrderedAlgebra const& a, Inequation const& ineq) {
    auto const&       vars = ineq.variables;
    std::size_t const n    = a.size();
    if (n == 0 && !vars.empty()) {
      return Check::pass();
    }
    std::vector<std::size_t> values(vars.size(), 0);
    Valuation                valuation;
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        valuation[vars[i]] = values[i];
      }
      auto l = evaluate(ineq.lhs, a, valuation);
      auto r = evaluate(ineq.rhs, a, valuation);
      if (!a.carrier().le(l, r)) {
        std::vector<std::string> witness;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          witness.push_back(vars[i] + "=" + a.carrier().label(values[i]));
        }
        return Check::fail(ineq.lhs.to_string() + " <= " + ineq.rhs.to_string() + " fails",
                           std::move(witness));
      }
      std::size_t k = vars.size();
      while (k > 0 && ++values[k - 1] == n) {
        values[k - 1] = 0;
        --k;
      }
      if (k == 0) {
        return Check::pass();
      }
    }
  }

  Check satisfies(OrderedAlgebra const& a, VarietyPresentation const& v) {
    for (auto const& ineq : v.inequations) {
      if (auto c = satisfies(a, ineq); !c) {
        return c;
      }
    }
    return Check::pass();
  }

  BirkhoffReport birkhoff_closure_check(VarietyPresentation const&      v,
                                        std::span<OrderedAlgebra const> family) {
    BirkhoffReport           report;
    std::vector<std::size_t> good;
    report.members = family.size();
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(family[i].signature() == v.signature)) {
        throw InputError("family member " + std::to_string(i) + " has the wrong signature");
      }
      if (satisfies(family[i], v)) {
        good.push_back(i);
      }
    }
    report.satisfying = good.size();
    for (auto i : good) {
      for (auto j : good) {
        ++report.products_checked;
        auto p = product_algebra(family[i], family[j]);
        if (auto c = satisfies(p.object, v); !c) {
          report.violations.push_back("product of members " + std::to_string(i) + " and "
                                      + std::to_string(j) + ": " + c.reason);
        }
      }
    }
    for (auto i : good) {
      for (auto const& subset : closed_subsets(family[i])) {
        ++report.subalgebras_checked;
        auto s = subalgebra(family[i], subset);
        if (auto c = satisfies(s.object, v); !c) {
          report.violations.push_back("subalgebra of member " + std::to_string(i) + ": "
                                      + c.reason);
        }
      }
    }
    for (auto i : good) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        bool surjection = false;
        for_each_homomorphism_table(family[i], family[j], [&](Table const& t) {
          std::vector<bool> hit(family[j].size(), false);
          for (auto y : t) {
            hit[y] = true;
          }
          surjection = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
          return !surjection;
        });
        if (!surjection) {
          continue;
        }
        ++report.images_checked;
        if (auto c = satisfies(family[j], v); !c) {
          report.violations.push_back("image of member " + std::to_string(i) + " onto member "
                                      + std::to_string(j) + ": " + c.reason);
        }
      }
    }
    return report;
  }

}  // namespace ordalg
