#ifndef CPPUNIT_DEFAULTPROTECTOR_H
#define CPPUNIT_DEFAULTPROTECTOR_H

#include <cppunit/Protector.h>

namespace CppUnit {

/*! \brief Default protector that catch all exceptions (Implementation).
 *
 * Implementation detail.
 * \internal This protector catch and generate a failure for all STL exception,
 * any CppUnit exception, and any other exception.
 */
class DefaultProtector : public Protector
{
public:
  bool protect( const Functor &functor,
                const ProtectorContext &context );
};

} // namespace CppUnit

#endif // CPPUNIT_DEFAULTPROTECTOR_H
