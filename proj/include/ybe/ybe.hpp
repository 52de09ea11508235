// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Convenience header pulling in the whole library except the JSON layer
// (ybe/io.hpp), which needs nlohmann/json.

#ifndef YBE_YBE_HPP_
#define YBE_YBE_HPP_

#include "corpus.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "perm_group.hpp"
#include "retract.hpp"
#include "solution.hpp"
#include "structure.hpp"
#include "sweep.hpp"
#include "twisted.hpp"

#endif  // YBE_YBE_HPP_
