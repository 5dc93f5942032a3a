// Everything in one include.
#ifndef DIFFCOH_DIFFCOH_HPP
#define DIFFCOH_DIFFCOH_HPP

#include "abelian_group.hpp"
#include "cech.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "finite_abelian.hpp"
#include "finite_field.hpp"
#include "galois.hpp"
#include "int_matrix.hpp"
#include "nonabelian_cech.hpp"
#include "polynomial.hpp"
#include "quadratic.hpp"
#include "sigma_module.hpp"
#include "simplicial.hpp"
#include "smith.hpp"

#endif // DIFFCOH_DIFFCOH_HPP
