#ifndef FOCKU_FOCKU_HPP
#define FOCKU_FOCKU_HPP

#include "focku/bargmann.hpp"
#include "focku/error.hpp"
#include "focku/fock_space.hpp"
#include "focku/operator_pair.hpp"
#include "focku/random.hpp"
#include "focku/uncertainty.hpp"

#endif
