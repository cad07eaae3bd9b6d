#pragma once

// Reference semantics for tests: enumerates every interpretation over a
// small explicit domain and evaluates sentences directly. Shares no code
// with the grounding reasoner or the SAT solver.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbd/syntax.hpp"

namespace mbd::testing {

class ModelOracle {
public:
    ModelOracle(std::vector<std::string> domain, std::set<std::string> classes, std::set<std::string> roles)
        : domain_(std::move(domain)), classes_(classes.begin(), classes.end()), roles_(roles.begin(), roles.end()) {
        for (std::size_t i = 0; i < domain_.size(); ++i) ind_[domain_[i]] = i;
        for (std::size_t i = 0; i < classes_.size(); ++i) cls_[classes_[i]] = i;
        for (std::size_t i = 0; i < roles_.size(); ++i) role_[roles_[i]] = i;
        n_ = domain_.size();
        atoms_ = classes_.size() * n_ + roles_.size() * n_ * n_;
        if (atoms_ > 24) throw std::runtime_error("reference oracle: too many ground atoms");
    }

    static ModelOracle for_sentences(const std::vector<Sentence>& kb, std::vector<std::string> extra = {}) {
        Signature sig;
        for (const auto& s : kb) sig.add(s);
        std::vector<std::string> dom(sig.individuals.begin(), sig.individuals.end());
        dom.insert(dom.end(), extra.begin(), extra.end());
        return ModelOracle(dom, sig.classes, sig.roles);
    }

    std::size_t atoms() const { return atoms_; }

    bool consistent(const std::vector<Sentence>& kb) const {
        return find_model(kb, nullptr);
    }

    // Every model of kb satisfies all of query.
    bool entails(const std::vector<Sentence>& kb, const std::vector<Sentence>& query) const {
        return !find_model(kb, &query);
    }

    // Classes A such that kb ∪ {A(x)} has no model, x the last domain element.
    std::set<std::string> unsatisfiable_classes(const std::vector<Sentence>& kb) const {
        std::set<std::string> out;
        for (const auto& c : classes_) {
            auto with = kb;
            with.push_back(Sentence::class_assertion(make_atom(c), domain_.back()));
            if (!consistent(with)) out.insert(c);
        }
        return out;
    }

private:
    bool find_model(const std::vector<Sentence>& kb, const std::vector<Sentence>* refute) const {
        const std::uint64_t total = std::uint64_t{1} << atoms_;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            bool ok = true;
            for (const auto& s : kb)
                if (!holds(s, bits)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (!refute) return true;
            bool all = true;
            for (const auto& q : *refute)
                if (!holds(q, bits)) {
                    all = false;
                    break;
                }
            if (!all) return true;
        }
        return false;
    }

    bool cls_bit(std::uint64_t bits, const std::string& c, std::size_t x) const {
        auto it = cls_.find(c);
        if (it == cls_.end()) return false;  // unknown class: empty extension is one admissible choice
        return (bits >> (it->second * n_ + x)) & 1u;
    }
    bool role_bit(std::uint64_t bits, const std::string& r, std::size_t x, std::size_t y) const {
        auto it = role_.find(r);
        if (it == role_.end()) return false;
        return (bits >> (classes_.size() * n_ + it->second * n_ * n_ + x * n_ + y)) & 1u;
    }

    bool eval(const Concept& c, std::size_t x, std::uint64_t bits) const {
        switch (c.kind) {
        case ConceptKind::Atom: return cls_bit(bits, c.name, x);
        case ConceptKind::Not: return !eval(*c.args[0], x, bits);
        case ConceptKind::And:
            for (const auto& a : c.args)
                if (!eval(*a, x, bits)) return false;
            return true;
        case ConceptKind::Or:
            for (const auto& a : c.args)
                if (eval(*a, x, bits)) return true;
            return false;
        case ConceptKind::Some:
            for (std::size_t y = 0; y < n_; ++y)
                if (role_bit(bits, c.name, x, y) && eval(*c.args[0], y, bits)) return true;
            return false;
        case ConceptKind::Only:
            for (std::size_t y = 0; y < n_; ++y)
                if (role_bit(bits, c.name, x, y) && !eval(*c.args[0], y, bits)) return false;
            return true;
        }
        return false;
    }

    bool holds(const Sentence& s, std::uint64_t bits) const {
        switch (s.kind) {
        case SentenceKind::Subsumption:
            for (std::size_t x = 0; x < n_; ++x)
                if (eval(*s.lhs, x, bits) && !eval(*s.rhs, x, bits)) return false;
            return true;
        case SentenceKind::Equivalence:
            for (std::size_t x = 0; x < n_; ++x)
                if (eval(*s.lhs, x, bits) != eval(*s.rhs, x, bits)) return false;
            return true;
        case SentenceKind::ClassAssertion: return eval(*s.lhs, ind_.at(s.subject), bits);
        case SentenceKind::RoleAssertion: return role_bit(bits, s.role, ind_.at(s.subject), ind_.at(s.object));
        }
        return false;
    }

    std::vector<std::string> domain_;
    std::vector<std::string> classes_;
    std::vector<std::string> roles_;
    std::map<std::string, std::size_t> ind_, cls_, role_;
    std::size_t n_ = 0;
    std::size_t atoms_ = 0;
};

}  // namespace mbd::testing
