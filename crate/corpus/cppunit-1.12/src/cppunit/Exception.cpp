#include <cppunit/Exception.h>


namespace CppUnit {


Exception::Exception( const Message &message,
                      const SourceLine &sourceLine )
    : m_message( message )
    , m_sourceLine( sourceLine )
{
}


Exception::Exception( const Exception &other )
   : std::exception( other )
{
  m_message = other.m_message;
  m_sourceLine = other.m_sourceLine;
}


Exception::~Exception() throw()
{
}


Exception &
Exception::operator =( const Exception& other )
{
// Don't call superclass operator =(). VC++ STL implementation
// has a bug. It calls the destructor and copy constructor of
// std::exception() which reset the virtual table to std::exception.
//  SuperClass::operator =(other);

  if ( &other != this )
  {
    m_message = other.m_message;
    m_sourceLine = other.m_sourceLine;
  }

  return *this;
}


const char*
Exception::what() const throw()
{
  Exception *mutableThis = const_cast<Exception *>( this );
  mutableThis->m_whatMessage = m_message.shortDescription() + "\n" +
                               m_message.details();
  return m_whatMessage.c_str();
}


SourceLine
Exception::sourceLine() const
{
  return m_sourceLine;
}


Message
Exception::message() const
{
  return m_message;
}


void
Exception::setMessage( const Message &message )
{
  m_message = message;
}


Exception *
Exception::clone() const
{
  return new Exception( *this );
}

} // namespace CppUnit
