#ifndef CHORDAL_FORGE_LEMMAS_HPP
#define CHORDAL_FORGE_LEMMAS_HPP

#include <chordal_forge/graph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace chordal_forge
{
    /// Outcome of one property checked over many instances.
    struct CheckTally
    {
        std::string name;
        Count checked = 0;
        Count failed = 0;
        std::string first_failure;

        CheckTally() = default;
        explicit CheckTally(std::string check_name) : name(std::move(check_name)) { }

        auto record(bool ok, const std::string & where) -> void;
        /// Adds other's counts; the first failure kept is this one's if any.
        auto merge(const CheckTally & other) -> void;
        auto passed() const -> bool { return failed == 0 && checked > 0; }
    };

    /// Every fact about g2, t_3 and g3 that the k = 2 and k = 3 inductions
    /// rely on. The g2 facts are checked for n <= nmax and all m from
    /// t_2(n) + 1 to C(n, 2); the t_3 and g3 identities for 5 <= n <= tnmax.
    auto lemma_checks(int nmax, int tnmax = 200) -> std::vector<CheckTally>;
}

#endif
