#pragma once

#include "algpoly/bench.hpp"
#include "algpoly/combinat.hpp"
#include "algpoly/discrete.hpp"
#include "algpoly/driver.hpp"
#include "algpoly/dualize.hpp"
#include "algpoly/element_io.hpp"
#include "algpoly/error.hpp"
#include "algpoly/io.hpp"
#include "algpoly/linalg.hpp"
#include "algpoly/numfield.hpp"
#include "algpoly/polyhedron.hpp"
#include "algpoly/scalar.hpp"
