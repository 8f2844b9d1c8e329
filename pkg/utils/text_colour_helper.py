from colorama import Fore, Style, init

# Windows consoles need the ANSI shim; elsewhere this is a no-op
init()


class TextColors:
    """Shortcuts for colorama colors to make console output easier to manage."""

    # Standard Colors
    R = Fore.RED
    G = Fore.GREEN
    Y = Fore.YELLOW
    C = Fore.CYAN
    M = Fore.MAGENTA

    # Light (Ex) Colors
    LR = Fore.LIGHTRED_EX
    LG = Fore.LIGHTGREEN_EX
    LB = Fore.LIGHTBLUE_EX
    LY = Fore.LIGHTYELLOW_EX
    LC = Fore.LIGHTCYAN_EX
    LM = Fore.LIGHTMAGENTA_EX

    # Text Styles
    RESET = Style.RESET_ALL
    BOLD = Style.BRIGHT
    DIM = Style.DIM

    @classmethod
    def paint(cls, text, colour):
        """Wraps `text` in `colour` and a reset."""
        return f"{colour}{text}{cls.RESET}"

    @classmethod
    def verdict(cls, ok):
        """Green VERIFIED or red FAILED."""
        return cls.paint("VERIFIED", cls.LG) if ok else cls.paint("FAILED", cls.LR)
