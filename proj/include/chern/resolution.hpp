#pragma once

#include <map>
#include <vector>

#include "chern/module_ops.hpp"

namespace chern {

/// F_0 <- F_1 <- ... <- F_p with maps[i] : F_{i+1} -> F_i.
template <class F>
struct FreeResolution {
  std::vector<FreeModule<F>> modules;
  std::vector<ModuleMap<F>> maps;

  /// Index of the last nonzero free module; -1 for the zero module.
  int length() const {
    for (int i = static_cast<int>(modules.size()) - 1; i >= 0; --i) {
      if (modules[static_cast<std::size_t>(i)].rank() > 0) return i;
    }
    return -1;
  }
  std::vector<int> betti() const;
  /// For each homological index, degree -> multiplicity.
  std::vector<std::map<int, int>> graded_betti() const;
};

/// Minimal graded free resolution. max_len < 0 means no bound beyond the
/// number of variables.
template <class F>
FreeResolution<F> minimal_free_resolution(const GradedModule<F>& m, int max_len = -1);

extern template struct FreeResolution<PrimeField>;
extern template struct FreeResolution<RationalField>;

}  // namespace chern
