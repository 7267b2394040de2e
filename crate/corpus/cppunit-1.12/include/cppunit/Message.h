#ifndef CPPUNIT_MESSAGE_H
#define CPPUNIT_MESSAGE_H

#include <cppunit/Portability.h>
#include <deque>
#include <string>

namespace CppUnit {

/*! \brief Message associated to an Exception.
 * \ingroup CreatingNewAssertions
 *  A message is composed of two items:
 *  - a short description (~20/30 characters)
 *  - a list of detail strings
 *
 *  The short description is used to indicate how the detail strings should be
 *  interpreted. It usually indicates the failure types, such as
 *  "assertion failed", "forced failure", "unexpected exception"...
 */
class CPPUNIT_API Message
{
public:
  Message();

  Message( const Message &other );

  explicit Message( const std::string &shortDescription );

  Message( const std::string &shortDescription,
           const std::string &detail1 );

  Message( const std::string &shortDescription,
           const std::string &detail1,
           const std::string &detail2 );

  virtual ~Message();

  Message &operator =( const Message &other );

  const std::string &shortDescription() const;

  int detailCount() const;

  std::string detailAt( int index ) const;

  std::string details() const;

  void clearDetails();

  void addDetail( const std::string &detail );

  void addDetail( const Message &message );

  void setShortDescription( const std::string &shortDescription );

  bool operator ==( const Message &other ) const;

  bool operator !=( const Message &other ) const;

private:
  std::string m_shortDescription;

  typedef std::deque<std::string> Details;
  Details m_details;
};

} // namespace CppUnit

#endif  // CPPUNIT_MESSAGE_H
