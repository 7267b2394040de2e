#include <cppunit/Portability.h>
#include <cppunit/Test.h>
#include <stdexcept>


namespace CppUnit {


Test *
Test::getChildTestAt( int index ) const
{
  checkIsValidIndex( index );
  return doGetChildTestAt( index );
}


Test *
Test::findTest( const std::string &testName ) const
{
  if ( getName() == testName )
    return const_cast<Test *>( this );

  int childCount = getChildTestCount();
  for ( int childIndex =0; childIndex < childCount; ++childIndex )
  {
    Test *found = getChildTestAt( childIndex )->findTest( testName );
    if ( found )
      return found;
  }

  throw std::invalid_argument( "No test named <" + testName + "> found in test <"
                               + getName() + ">." );
}


void
Test::checkIsValidIndex( int index ) const
{
  if ( index < 0  ||  index >= getChildTestCount() )
    throw std::out_of_range( "Test::checkValidIndex(): invalid index" );
}


} // namespace CppUnit
