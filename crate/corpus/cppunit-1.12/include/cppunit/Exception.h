#ifndef CPPUNIT_EXCEPTION_H
#define CPPUNIT_EXCEPTION_H

#include <cppunit/Portability.h>
#include <cppunit/Message.h>
#include <cppunit/SourceLine.h>
#include <exception>

namespace CppUnit {

/*! \brief Exceptions thrown by failed assertions.
 * \ingroup BrowsingCollectedTestResult
 *
 * Exception is an exception that serves
 * descriptive strings through its what() method
 */
class CPPUNIT_API Exception : public std::exception
{
public:
  Exception( const Message &message = Message(),
             const SourceLine &sourceLine = SourceLine() );

  Exception( const Exception &other );

  virtual ~Exception() throw();

  Exception &operator =( const Exception &other );

  const char *what() const throw();

  SourceLine sourceLine() const;

  Message message() const;

  void setMessage( const Message &message );

  virtual Exception *clone() const;

protected:
  typedef std::exception SuperClass;

  Message m_message;
  SourceLine m_sourceLine;
  std::string m_whatMessage;
};

} // namespace CppUnit

#endif // CPPUNIT_EXCEPTION_H
