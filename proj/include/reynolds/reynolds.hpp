#ifndef REYNOLDS_REYNOLDS_HPP
#define REYNOLDS_REYNOLDS_HPP

#include "reynolds/error.hpp"
#include "reynolds/gf.hpp"
#include "reynolds/linalg.hpp"
#include "reynolds/algebra.hpp"
#include "reynolds/io.hpp"
#include "reynolds/quiver.hpp"
#include "reynolds/kulshammer.hpp"
#include "reynolds/trivext.hpp"
#include "reynolds/fingerprint.hpp"

#endif  // REYNOLDS_REYNOLDS_HPP
