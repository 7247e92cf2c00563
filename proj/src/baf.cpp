#include "baf.hpp"

#include <algorithm>

namespace abaf {

CoreBaf::CoreBaf(std::size_t num_atoms, std::vector<CoreArgument> args, std::vector<Edge> attacks,
                 std::vector<Edge> supports, std::vector<Atom> targets)
    : num_atoms_(num_atoms),
      args_(std::move(args)),
      attacks_(std::move(attacks)),
      supports_(std::move(supports)),
      targets_(std::move(targets)) {
    auto tidy = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(attacks_);
    tidy(supports_);
    tidy(targets_);

    const std::size_t n = args_.size();
    attackers_.assign(n, {});
    attacked_.assign(n, {});
    supported_.assign(n, {});
    for (auto [x, y] : attacks_) {
        attacked_[x].push_back(y);
        attackers_[y].push_back(x);
    }
    for (auto [x, y] : supports_) supported_[x].push_back(y);

    closure_.assign(n, ArgSet(n));
    std::vector<ArgId> stack;
    for (ArgId a = 0; a < n; ++a) {
        ArgSet& cl = closure_[a];
        cl.set(a);
        stack.assign(1, a);
        while (!stack.empty()) {
            ArgId x = stack.back();
            stack.pop_back();
            for (ArgId y : supported_[x]) {
                if (!cl.test(y)) {
                    cl.set(y);
                    stack.push_back(y);
                }
            }
        }
    }
}

bool CoreBaf::is_target(Atom p) const { return std::binary_search(targets_.begin(), targets_.end(), p); }

std::vector<ArgId> CoreBaf::concluding(Atom p) const {
    std::vector<ArgId> out;
    for (ArgId a = 0; a < args_.size(); ++a)
        if (args_[a].conclusion == p) out.push_back(a);
    return out;
}

AssumptionSet CoreBaf::assumptions_of(const ArgSet& e) const {
    AssumptionSet out(num_atoms_);
    e.for_each([&](std::size_t a) { out |= args_[a].support; });
    return out;
}

ArgSet CoreBaf::lift(const AssumptionSet& s) const {
    ArgSet out(args_.size());
    for (ArgId a = 0; a < args_.size(); ++a)
        if (args_[a].support.is_subset_of(s)) out.set(a);
    return out;
}

}  // namespace abaf
