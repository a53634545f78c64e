#pragma once

// Everything except JSON persistence (redinv/json_io.hpp, which needs OpenSSL).

#include "redinv/integer.hpp"
#include "redinv/matrix.hpp"
#include "redinv/normal_form.hpp"
#include "redinv/abelian_group.hpp"
#include "redinv/finite_group.hpp"
#include "redinv/gamma_module.hpp"
#include "redinv/complex.hpp"
#include "redinv/root_datum.hpp"
#include "redinv/catalog.hpp"
#include "redinv/tresolution.hpp"
#include "redinv/cech.hpp"
