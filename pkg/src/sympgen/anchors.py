"""Bundled source anchors for the claim registry.

Each entry maps a short label to a verbatim quote from the source text that
states the assertion being re-checked.  Claims carry one of these labels in
their ``paper_ref``; a test asserts that every cited quote appears verbatim
in :func:`anchor_file_text`, keeping the citations honest.
"""

ANCHORS = {
    "q=2-L67": r"Let $L_6=\{1, 3, 4, 7, 11\}$ and $L_7=\{1,2,3,7,8,13,14 \}$.",
    "q=2-L8": r"$L_8=\{1, 14,15,18,23,  25,  28 \}$",
    "q=2-L9": r"$L_9= \{6,7,8,11,13,16,19,20,31  \}$",
    "q=2-L11": r"$L_{11}=\{ 1,3,4,5,8,9,13,15,16,22,29,33\}$",
    "q=2-sl9": r"$$\bigcup_{k \in L} \varpi(g^k \tau^y \tau^{y^2x}) =\varpi(\SL_9(2)),\quad  \textrm{where } L= \{ 2,4,8,11,12\},$$",
    "q=2-obstruction-n6": r"the contradiction $1=Q(e_{-1})=Q(e_{-4})=0$",
    "q=2-obstruction-n8": r"the contradiction $1=Q(e_1)=Q(e_8)=0$",
    "q4": r"Let $q=4$ and let $H=\langle x,y\rangle$",
    "q4-L": r"\varpi(\mathrm{Sp}_{12}(4)),\quad \textrm{where }  k \in \{2,3,5,6,15,37 \}",
    "G7-q8": r"L= \{6,19,26,37\}.$$",
    "s-sigma": r"s_{\sigma^{\pm 1}} & =&  e_{n-7}+e_{n-4}+e_{n-1} + \sigma^{\pm 1}\left(e_{n-3}+e_{n}\right)+\sigma^{\mp 1}e_{n-2}",
    "des-tau": r"$b_1=a e_{n-4} - 2 e_{n-1} + a e_{n}$",
    "G9": r"$\F_p[a^3]=\F_q$",
    "G3": r"acts on $W_3$",
    "q7": r"If $q=7$, there is no element in $\F_q^*$ that satisfies the hypotheses of Lemma \ref{G9}.",
    "q7-L": r"=\varpi(\SL_9(7)),\quad \textrm{where } L=\{ 1, 7,11,15, 22  \} .",
    "Phat": r"a^6-27",
    "WSL6": r"$g=r_1r_2r_4r_2^{y^2} r_4^{y^2}$, $I_3=\{1,3,34\}$, $I_5=\{1,2,7,15\}$ and $I_7=\{1,7,32 \}$.",
    "pno213": r"minimal polynomial",
    "main10-q7": r"=\varpi(\mathrm{Sp}_{20}(7)),\quad \textrm{where } L=\{1,3,5,6, 9,12,22,31,65\}.",
    "G9-10": r"minimal polynomial over $\F_p$ is $t^2+t+2$",
    "main12": r"Setting $L_3=\{ 4,5,13,16,17,24,28, 35,37,87,$ $89  \}$ and" + "\n" +
              r"$L_5=\{3, 5, 6,8, 12,13,14,15,18 ,25,34, 47 \}$",
    "G9-12": r"$(a+1)(2a^3-1)",
    "main14-q7": r"Setting $L=\{3,5, 6,7,8,10,14, 17,19,20,29,32,$ $56   \}$",
    "G9-14": r"$(3 a^3+1)(a^3+8) (a^3-a^2-2) ( a^6+a^5+a^4-4 a^3-2 a^2+4 )\neq 0$",
    "charpoly-n4": r"$$t^8 + 2t^7 + t^6 + 2t^5 + 4t^4 + 2t^3 + t^2 + 2t + 1=(t+1)^4(t+\omega)^2(t+\omega^2)^2.$$",
    "chi-xy-n4": r"\chi_{xy}(t)=t^8 - a t^7 + a t^5 - (a^2 + 1) t^4 + a t^3 - a t + 1.",
    "w-n4": r"$$w_1= (1,0,-a^{-1},0,0,0,-a^{-1},0)^T,\;\; xw_1=w_2=(0,1, a^{-1} ,0,0,0,a^{-1},-1)^T,$$",
    "cube-n4": r"\tilde V_{-1}\left([x,y]^3\right)=\langle (\alpha_1, \alpha_2,\alpha_3,\alpha_4,\alpha_5,-\alpha_4-\alpha_5,",
    "M=H": r"it is easy to check that $a=1$ satisfies all requirements",
    "c-order-n4": r"If $q=3$ and $a=\pm 1$, then $C^2y$ has order $6\cdot 13$.",
    "main4-q": r"Assume $q=5$: if $a=\pm 1$, then $C^2y$ has order $6\cdot 31$; if $a=\pm 2$, then $C^3y$ has order $6\cdot 31$.",
    "subfield": r"\mathrm{tr}(xy)=a",
    "main5": r"Define $L_4=\{ 4, 7, 10, 12, 21 \}$ and $L_{25}=\{  1,6,  11,    12,13,  14 \}$.",
    "chi-eta-n5": r"where $f_1(t)=t^2+t+1$ and $f_2(t)=t^3-a^2t-1$.",
    "tau-n5": r"(t-1)^{10}",
    "ex5": r"Suppose $q\not \in \{2,4,25\}$. Then there exists $a\in \F_q^*$  such that",
    "subfield5": r"\mathrm{tr}((xy)^5)= -5a^2 - 1",
    "quadform-n5": r"1=Q(e_1)=Q(e_4)=0",
    "main6": r"$L_3=\{3,4,11,13, 19\}$ and" + "\n" + r"$L_9=\{1,3,7,9,11,12,26 \}$.",
    "chi-comm-n6": r"$$(t+1)^4(t^4 - t^3 + t^2 - t + 1)^2.$$",
    "trace6": r"\mathrm{tr}(y)=-3",
    "tau-n6": r"(t+1)^{12}",
    "irr6": r"$(a^2+1) (a^4+5a^2+5) (a^5-a^4+3 a^3-5 a^2+3 a-5)\neq 0$",
    "subfield6": r"\F_p[a^2]=\F_q",
    "quadform-n6": r"0=Q(e_1)=Q(e_2)=1",
    "main7": r"$L_3=\{1,3,7,9,10, 19, 39  \}$," + "\n" + r"$L_4=\{ 1,7,10, 13,16, 20,43 \}$," + "\n" +
             r"$L_7=\{1,4,5,8,12,13,27,47   \}$," + "\n" + r"$L_8=\{1,3,5, 10,14,15, 18\}$ and" + "\n" +
             r"$L_{16}=\{3, 4,11,13,19,24,27\}$.",
    "chi-eta-n7": r"$\eta= y (xy)^3$.",
    "tau-n7": r"(t + 1)^{10}(t^2 + a^8 t + 1)^2",
    "G72": r"\F_2[a]=\F_q",
    "K9": r"\F_p[a^3]=\F_q",
    "7ex": r"a^2+a+1",
    "subfield7": r"\mathrm{tr}(xy)",
    "quadform-n7": r"$1=Q(e_1) =Q(e_5)  =0$",
    "main8": r"$L_3=\{3,4,7,9,10,11,24,27\}$," + "\n" + r"$L_5=\{3,9,10,13,14,15,34 \}$ and" + "\n" +
             r"$L_9=\{4,6,7,8,11,15,20,54 \}$.",
    "chi-eta-n8": r"\eta=y^2[x,y]^3y^2",
    "irr8": r"5a^4-128a^2-108",
    "8podd": r"\F_p[a^4]=\F_q",
    "P-n8": r"whose determinant is $a^4$",
    "tau-rel-n8": r"the characteristic polynomial of $\tau_1 \tau_4$ is $(t + 1)^3 (t^2 + a^4 t + 1)$",
    "subfield8": r"\mathrm{tr}((xy)^8)=8 a^2 - 1",
    "quadform-n8": r"$1=Q(e_1) =Q(e_6)  =0$",
    "main9": r"$L_3=\{3,4,6,7, 11,14, 23,37,38\}$," + "\n" + r"$L_4=\{1,3,4,5,7,9,  14,  24,53,89\}$," + "\n" +
             r"$L_5=\{5,6,7,8,9,10,11,18,$ $126  \}$," + "\n" + r"$L_7=\{3,6,7,8, 16,17, 20,41, 126\}$ and" + "\n" +
             r"$L_8=\{3, 10,13,15, 18,19, 25,31,53 \}$.",
    "tau-n9": r"( t + 1)^{14} (t^2 + (a^{12} + a^4) t + 1)^2",
    "ytau-n9": r"(a^3+a+1)^4",
    "K9even": r"\F_2[a^3+a]=\F_q",
    "K9odd": r"\F_p[a^3(a+2)]=\F_q",
    "9ex": r"t^2-17",
    "subfield9-2": r"\mathrm{tr}((xy)^3)=a^3 + a + 1",
    "subfield9-odd": r"\mathrm{tr}(\tau\tau^y)=-4 a^4 - 8 a^3 + 18",
    "quadform-n9": r"$1=Q(e_{-1}) =Q(e_{-9})  =0$",
    "main11": r"$L_3=\{1,4,6,8,10,11,12, 16, 20, 28, 35\}$," + "\n" +
              r"$L_4=\{3, 5,7,8, 9, 12,13,15,16, 18  ,64\}$ and $L_5=\{1,3,9,14,15,16,18,20, 31, 46, 88 \}$.",
    "chi-eta-n11": r"Assume $q>2$ and consider the element $\eta=[x,y]^2 y$.",
    "tau-n11": r"bireflection",
    "G11": r"\F_2[a]=\F_q",
    "Gn11": r"\F_p[a^3(a+2)]=\F_q",
    "11ex": r"t^2+2",
    "subfield11": r"\mathrm{tr}(xy)",
    "quadform-n11": r"$1=Q(e_1) =Q(e_9)  =0$",
    "quadform-n4": r"1=Q(e_1)=Q(e_3)=0",
    "blocks": r"\mathcal{A}_r",
    "theta": r"(t^2+1)(t^2+t+1)(t^2+at+1)",
    "campoN": r"$\F_p[g(b)]\neq \F_q$",
}


def anchor_file_text() -> str:
    """All anchor quotes concatenated; the containment oracle for citations."""
    return "\n".join(f"[{label}]\n{quote}" for label, quote in sorted(ANCHORS.items()))
