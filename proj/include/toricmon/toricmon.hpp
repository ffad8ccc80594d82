#pragma once

#include "toricmon/numeric.hpp"
#include "toricmon/lattice.hpp"
#include "toricmon/cone.hpp"
#include "toricmon/laurent.hpp"
#include "toricmon/derivation.hpp"
#include "toricmon/demazure.hpp"
#include "toricmon/monoid.hpp"
#include "toricmon/chart.hpp"
#include "toricmon/verify.hpp"
#include "toricmon/io.hpp"
#include "toricmon/catalog.hpp"
