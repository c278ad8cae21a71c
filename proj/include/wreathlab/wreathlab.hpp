#ifndef WREATHLAB_WREATHLAB_HPP_
#define WREATHLAB_WREATHLAB_HPP_

#include "builders.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "finite_group.hpp"
#include "hom.hpp"
#include "intmatrix.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "sections.hpp"
#include "serialize.hpp"
#include "structure.hpp"
#include "subgroup.hpp"
#include "suite.hpp"
#include "twisted.hpp"
#include "wreath.hpp"

#endif  // WREATHLAB_WREATHLAB_HPP_
