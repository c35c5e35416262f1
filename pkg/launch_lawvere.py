"""lawvere main entry point"""

import lawvere

lawvere.main()
