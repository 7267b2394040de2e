#ifndef CPPUNIT_PROTECTOR_H
#define CPPUNIT_PROTECTOR_H

#include <cppunit/SourceLine.h>

namespace CppUnit {

class Exception;
class Message;
class ProtectorContext;
class TestResult;


class CPPUNIT_API Functor
{
public:
  virtual ~Functor();

  virtual bool operator()() const =0;
};


/*! \brief Protects one or more test case run.
 *
 * Protector are used to globably 'decorate' a test case. The most common
 * usage of Protector is to catch exception that do not subclass std::exception,
 * such as MFC CException class or Rogue Wave RWXMsg class, and capture the
 * message associated to the exception. In fact, protector capture message from
 * Exception thrown by test case.
 *
 * Another usage of Protector is to catch the SEH exception under Windows,
 * which are not turned into C++ exceptions by default.
 *
 * \see TestResult::pushProtector(), ProtectorChain.
 */
class CPPUNIT_API Protector
{
public:
  virtual ~Protector();

  virtual bool protect( const Functor &functor,
                        const ProtectorContext &context ) =0;

protected:
  void reportError( const ProtectorContext &context,
                    const Exception &error ) const;

  void reportError( const ProtectorContext &context,
                    const Message &message,
                    const SourceLine &sourceLine = SourceLine() ) const;

  void reportFailure( const ProtectorContext &context,
                      const Exception &failure ) const;

  Message actualMessage( const Message &message,
                         const ProtectorContext &context ) const;
};

} // namespace CppUnit

#endif // CPPUNIT_PROTECTOR_H
