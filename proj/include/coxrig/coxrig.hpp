#pragma once

#include "coxrig/abelianization.hpp"
#include "coxrig/coxeter_matrix.hpp"
#include "coxrig/diagram_isomorphism.hpp"
#include "coxrig/finite_type.hpp"
#include "coxrig/gf2_subspace.hpp"
#include "coxrig/group_engine.hpp"
#include "coxrig/matrix_io.hpp"
#include "coxrig/presets.hpp"
#include "coxrig/rigidity_class.hpp"
#include "coxrig/rigidity_oracle.hpp"
