#pragma once

#include "sunisb/errors.hpp"
#include "sunisb/rational.hpp"
#include "sunisb/ket.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/operator.hpp"
#include "sunisb/algebra.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/linalg.hpp"
#include "sunisb/irreps.hpp"
#include "sunisb/su3x.hpp"
#include "sunisb/serialize.hpp"
#include "sunisb/verify.hpp"
